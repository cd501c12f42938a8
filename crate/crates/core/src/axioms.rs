//! The axiom suite: kernels and cokernels, mono/epi characterizations,
//! closedness, `'N` / `'N°` and the exact-rows identities, plus invariant
//! batteries over seeded random ideals and complexes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzz;
use crate::homology::{complex_conditions, left_homology, right_homology};
use crate::ideals::{
    coim, coim_ideal, coker, coker_ideal, im, im_ideal, is_closed, is_epi, is_mono, ker, ker_ideal, left_annihilator,
    principal_left, principal_right, product, right_annihilator, saturate, Ideal, Side, DEFAULT_ENUM_CAP,
};
use crate::lincat::{FiniteLinearCategory, Morphism};

pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Holds,
    Fails,
    Vacuous,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub status: Status,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    fn new(axiom: &str) -> Self {
        Self { axiom: axiom.into(), status: Status::Holds, checked: 0, witnesses: Vec::new(), notes: Vec::new() }
    }

    fn fail(&mut self, subject: String, detail: impl Into<String>) {
        self.witnesses.push(Witness { subject, detail: detail.into() });
    }

    fn finish(mut self) -> Self {
        self.status = if !self.witnesses.is_empty() {
            Status::Fails
        } else if self.checked == 0 {
            Status::Vacuous
        } else {
            Status::Holds
        };
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }
}

/// Every morphism when each Hom-group fits under `cap`, otherwise its basis.
pub fn enumerate_morphisms(cat: &FiniteLinearCategory, cap: u128) -> Vec<Morphism> {
    let mut out = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            match cat.all_morphisms(a, b, cap) {
                Ok(all) => out.extend(all),
                Err(_) => out.extend(cat.basis(a, b)),
            }
        }
    }
    out
}

fn all_morphisms_strict(cat: &FiniteLinearCategory, cap: u128) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            out.extend(cat.all_morphisms(a, b, cap)?);
        }
    }
    Ok(out)
}

/// Kernel and cokernel ideals exist for every morphism and annihilate it.
pub fn check_k(cat: &FiniteLinearCategory, cap: u128) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("'K: every morphism has a kernel and a cokernel ideal");
    let (mut ker_total, mut coker_total) = (0u128, 0u128);
    for f in enumerate_morphisms(cat, cap) {
        let (k, c) = (ker(cat, &f), coker(cat, &f));
        for g in k.generators() {
            if !cat.compose(&f, &g)?.is_zero() {
                r.fail(cat.expression(&f), format!("f∘k ≠ 0 for k = {}", cat.expression(&g)));
            }
        }
        for g in c.generators() {
            if !cat.compose(&g, &f)?.is_zero() {
                r.fail(cat.expression(&f), format!("c∘f ≠ 0 for c = {}", cat.expression(&g)));
            }
        }
        ker_total += k.size();
        coker_total += c.size();
        r.checked += 1;
    }
    r.notes.push(format!("total kernel ideal size {ker_total}, total cokernel ideal size {coker_total}"));
    Ok(r.finish())
}

fn cancellable_left(cat: &FiniteLinearCategory, f: &Morphism, cap: u128) -> Result<bool> {
    for x in cat.objects() {
        for phi in cat.all_morphisms(x, f.source(), cap)? {
            if !phi.is_zero() && cat.compose(f, &phi)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cancellable_right(cat: &FiniteLinearCategory, f: &Morphism, cap: u128) -> Result<bool> {
    for z in cat.objects() {
        for psi in cat.all_morphisms(f.target(), z, cap)? {
            if !psi.is_zero() && cat.compose(&psi, f)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f` is mono iff `Ker(f) = 0`, epi iff `Coker(f) = 0`, against cancellation
/// tested on every morphism.
pub fn check_mono_epi(cat: &FiniteLinearCategory, cap: u128) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("mono iff Ker(f) = 0, epi iff Coker(f) = 0");
    let (mut monos, mut epis) = (0, 0);
    for f in all_morphisms_strict(cat, cap)? {
        let (im_mono, can_mono) = (is_mono(cat, &f), cancellable_left(cat, &f, cap)?);
        let (im_epi, can_epi) = (is_epi(cat, &f), cancellable_right(cat, &f, cap)?);
        if im_mono != can_mono {
            r.fail(cat.expression(&f), format!("Ker(f) = 0 is {im_mono}, left cancellable is {can_mono}"));
        }
        if im_epi != can_epi {
            r.fail(cat.expression(&f), format!("Coker(f) = 0 is {im_epi}, right cancellable is {can_epi}"));
        }
        monos += usize::from(can_mono);
        epis += usize::from(can_epi);
        r.checked += 1;
    }
    r.notes.push(format!("{monos} monomorphisms, {epis} epimorphisms"));
    Ok(r.finish())
}

fn closed_or_witness(r: &mut AxiomReport, what: &str, i: &Ideal<'_>) -> Result<()> {
    if !is_closed(i)? {
        r.fail(what.to_string(), i.describe());
    }
    r.checked += 1;
    Ok(())
}

/// Kernels, cokernels, images and coimages of the sampled ideals are closed.
pub fn check_closedness(cat: &FiniteLinearCategory, sample: &[Ideal<'_>]) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("kernels, cokernels, images and coimages are closed");
    for (k, i) in sample.iter().enumerate() {
        match i.side() {
            Side::Left => {
                closed_or_witness(&mut r, &format!("Ker(I{k})"), &ker_ideal(i)?)?;
                closed_or_witness(&mut r, &format!("Coim(I{k})"), &coim_ideal(i)?)?;
            }
            Side::Right => {
                closed_or_witness(&mut r, &format!("Coker(I{k})"), &coker_ideal(i)?)?;
                closed_or_witness(&mut r, &format!("Im(I{k})"), &im_ideal(i)?)?;
            }
            Side::TwoSided => {
                closed_or_witness(&mut r, &format!("Ker(I{k})"), &ker_ideal(i)?)?;
                closed_or_witness(&mut r, &format!("Coker(I{k})"), &coker_ideal(i)?)?;
            }
        }
    }
    r.notes.push(format!("{} sampled ideals over {} objects", sample.len(), cat.object_count()));
    Ok(r.finish())
}

fn is_identity(cat: &FiniteLinearCategory, f: &Morphism) -> bool {
    f.source() == f.target() && *f == cat.identity(f.source())
}

/// `'N`: every non-identity monomorphism `f` satisfies `|f⟩ = Im(f)`.
pub fn check_n(cat: &FiniteLinearCategory, cap: u128) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("'N: |f> = Im(f) for every monomorphism f");
    for f in all_morphisms_strict(cat, cap)? {
        if is_identity(cat, &f) || !is_mono(cat, &f) {
            continue;
        }
        r.checked += 1;
        let (p, i) = (principal_right(cat, &f), im(cat, &f));
        if p != i {
            r.fail(cat.expression(&f), format!("|f> has size {}, Im(f) has size {}", p.size(), i.size()));
        }
    }
    Ok(r.finish())
}

/// `'N°`: every non-identity epimorphism `g` satisfies `⟨g| = Coim(g)`.
pub fn check_n_op(cat: &FiniteLinearCategory, cap: u128) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("'N°: <g| = Coim(g) for every epimorphism g");
    for g in all_morphisms_strict(cat, cap)? {
        if is_identity(cat, &g) || !is_epi(cat, &g) {
            continue;
        }
        r.checked += 1;
        let (p, c) = (principal_left(cat, &g), coim(cat, &g));
        if p != c {
            r.fail(cat.expression(&g), format!("<g| has size {}, Coim(g) has size {}", p.size(), c.size()));
        }
    }
    Ok(r.finish())
}

/// `Ker(Coim f) = Im(Ker f)` and `Ker(Coker f) = Im(Im f)` for every morphism,
/// and the corresponding rows for each sampled ideal.
pub fn check_exact_rows(cat: &FiniteLinearCategory, sample: &[Ideal<'_>], cap: u128) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("exact rows: Ker(Coim) = Im(Ker), Ker(Coker) = Im(Im)");
    for f in enumerate_morphisms(cat, cap) {
        let kcoim = right_annihilator(&coim(cat, &f));
        let imker = im_ideal(&ker(cat, &f))?;
        if kcoim != imker {
            r.fail(cat.expression(&f), "Ker(Coim f) ≠ Im(Ker f)");
        }
        let kcoker = ker_ideal(&coker(cat, &f))?;
        let imim = im_ideal(&im(cat, &f))?;
        if kcoker != imim {
            r.fail(cat.expression(&f), "Ker(Coker f) ≠ Im(Im f)");
        }
        r.checked += 1;
    }
    for (k, i) in sample.iter().enumerate() {
        match i.side() {
            Side::Left => {
                if ker_ideal(&coim_ideal(i)?)? != im_ideal(&ker_ideal(i)?)? {
                    r.fail(format!("I{k}"), "Ker(Coim I) ≠ Im(Ker I)");
                }
            }
            Side::Right => {
                if ker_ideal(&coker_ideal(i)?)? != im_ideal(&im_ideal(i)?)? {
                    r.fail(format!("I{k}"), "Ker(Coker I) ≠ Im(Im I)");
                }
            }
            Side::TwoSided => continue,
        }
        r.checked += 1;
    }
    Ok(r.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub fuzz_ideals: usize,
    pub fuzz_complexes: usize,
    pub cap: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, fuzz_ideals: 500, fuzz_complexes: 40, cap: DEFAULT_ENUM_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub objects: Vec<String>,
    pub morphisms: u128,
    pub axioms: Vec<AxiomReport>,
    pub batteries: Vec<AxiomReport>,
}

impl SuiteReport {
    pub fn get(&self, prefix: &str) -> Option<&AxiomReport> {
        self.axioms.iter().chain(&self.batteries).find(|r| r.axiom.starts_with(prefix))
    }
}

/// Principal ideals of every basis morphism, the zero ideals, then
/// `config.fuzz_ideals` seeded random ideals.
pub fn ideal_sample<'c>(cat: &'c FiniteLinearCategory, config: &SuiteConfig) -> Vec<Ideal<'c>> {
    let mut out = Vec::new();
    for f in cat.all_basis_morphisms() {
        out.push(principal_left(cat, &f));
        out.push(principal_right(cat, &f));
    }
    out.push(Ideal::zero(cat, Side::Left, cat.objects()));
    out.push(Ideal::zero(cat, Side::Right, cat.objects()));
    let mut rng = fuzz::rng(config.seed);
    out.extend((0..config.fuzz_ideals).map(|_| fuzz::random_ideal(&mut rng, cat)));
    out
}

fn ideal_battery(cat: &FiniteLinearCategory, sample: &[Ideal<'_>]) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("ideal battery: triple annihilators, saturation, principal products");
    for (k, i) in sample.iter().enumerate() {
        let once = match i.side() {
            Side::Left => right_annihilator(i),
            _ => left_annihilator(i),
        };
        let thrice = match i.side() {
            Side::Left => right_annihilator(&left_annihilator(&once)),
            _ => left_annihilator(&right_annihilator(&once)),
        };
        if once != thrice {
            r.fail(format!("I{k}"), "triple annihilator differs from the single one");
        }
        if !i.is_saturated() || !saturate(cat, i.side(), &i.generators()).same_class(i) {
            r.fail(format!("I{k}"), "not reproduced by saturating its generators");
        }
        r.checked += 1;
    }
    for f in cat.all_basis_morphisms() {
        for g in cat.all_basis_morphisms() {
            if g.source() != f.target() {
                continue;
            }
            let gf = cat.compose(&g, &f)?;
            let prod = product(&principal_left(cat, &g), &principal_right(cat, &f))?;
            if !prod.same_class(&saturate(cat, Side::TwoSided, &[gf])) {
                r.fail(format!("{} ∘ {}", cat.expression(&g), cat.expression(&f)), "<g|·|f> ≠ <g∘f>");
            }
            let conds = complex_conditions(cat, &g, &f)?;
            if conds[0] != conds[1] || conds[1] != conds[2] {
                r.fail(format!("{} ∘ {}", cat.expression(&g), cat.expression(&f)), format!("conditions {conds:?}"));
            }
            r.checked += 1;
        }
    }
    Ok(r.finish())
}

fn homology_battery(cat: &FiniteLinearCategory, config: &SuiteConfig) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("homology battery: functoriality and left/right duality");
    let mut rng = fuzz::rng(config.seed.wrapping_add(1));
    let op = cat.opposite();
    for k in 0..config.fuzz_complexes {
        let c = fuzz::random_complex(&mut rng, cat, 4);
        let rev = c.reversed(cat);
        for n in c.degrees() {
            let (h, l) = (right_homology(cat, &c, n)?, left_homology(cat, &c, n)?);
            if !h.family.check_functoriality()? || !l.family.check_functoriality()? {
                r.fail(format!("C{k}"), format!("homology in degree {n} is not functorial"));
            }
            let dual = right_homology(&op, &rev, -n)?;
            if cat.objects().any(|x| l.family.invariants(x) != dual.family.invariants(x)) {
                r.fail(format!("C{k}"), format!("left homology in degree {n} differs from the opposite reading"));
            }
            r.checked += 1;
        }
    }
    Ok(r.finish())
}

/// Runs every axiom check and both batteries, deterministically for a seed.
pub fn run_suite(cat: &FiniteLinearCategory, config: &SuiteConfig) -> Result<SuiteReport> {
    let sample = ideal_sample(cat, config);
    let morphisms = cat.morphism_count();
    let axioms = vec![
        check_k(cat, config.cap)?,
        check_mono_epi(cat, config.cap)?,
        check_closedness(cat, &sample)?,
        check_n(cat, config.cap)?,
        check_n_op(cat, config.cap)?,
        check_exact_rows(cat, &sample, config.cap)?,
    ];
    let batteries = vec![ideal_battery(cat, &sample)?, homology_battery(cat, config)?];
    Ok(SuiteReport {
        config: *config,
        objects: cat.objects().map(|a| cat.label(a).to_string()).collect(),
        morphisms,
        axioms,
        batteries,
    })
}

/// Fatal findings: failures of the checks that follow from the definitions.
pub fn definitional_failures(report: &SuiteReport) -> Vec<&AxiomReport> {
    report
        .axioms
        .iter()
        .chain(&report.batteries)
        .filter(|r| r.fails() && !r.axiom.starts_with("'N"))
        .collect()
}

/// Errors on the first definitional failure.
pub fn ensure_definitional(report: &SuiteReport) -> Result<()> {
    match definitional_failures(report).first() {
        Some(r) => Err(Error::WellDefinedness(format!("{} fails", r.axiom))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests;
