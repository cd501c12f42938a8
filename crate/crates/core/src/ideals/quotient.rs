use super::{Ideal, Side};
use crate::error::{Error, Result};
use crate::lincat::{CategoryData, FiniteLinearCategory, HomGroup, Morphism, ObjectId};
use crate::linalg::{SubgroupBasis, Subquotient};

/// `A/I` for a two-sided ideal `I`, with the projection and a section.
#[derive(Clone, Debug)]
pub struct QuotientCategory {
    category: FiniteLinearCategory,
    presentations: Vec<Subquotient>,
}

/// Same objects, `Hom(A,B)/I(A,B)`, induced composition.
pub fn quotient_category(ideal: &Ideal<'_>) -> Result<QuotientCategory> {
    if ideal.side() != Side::TwoSided {
        return Err(Error::SideMismatch(format!("quotient by a {} ideal", ideal.side())));
    }
    let cat = ideal.category();
    let n = cat.object_count();
    let mut presentations = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for (a, b) in ideal.pairs() {
        let sq = Subquotient::new(SubgroupBasis::full(cat.hom(a, b)), ideal.component(a, b).clone())?;
        let labels = (0..sq.orders().rank()).map(|k| format!("[{}]", sq.lifts()[k])).collect();
        homs.push(HomGroup { source: a, target: b, orders: sq.orders().clone(), basis_labels: labels });
        presentations.push(sq);
    }
    let rep = |a: usize, b: usize, k: usize| -> Morphism {
        cat.morphism(ObjectId(a), ObjectId(b), presentations[a * n + b].lifts()[k].clone())
            .expect("lifts lie in Hom")
    };
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (rab, rbc) = (homs[a * n + b].rank(), homs[b * n + c].rank());
                let mut table = Vec::with_capacity(rab * rbc);
                for j in 0..rbc {
                    for i in 0..rab {
                        let gf = cat.compose(&rep(b, c, j), &rep(a, b, i))?;
                        table.push(presentations[a * n + c].project(gf.coords())?);
                    }
                }
                comp.push(table);
            }
        }
    }
    let identities = (0..n)
        .map(|a| presentations[a * n + a].project(cat.identity(ObjectId(a)).coords()))
        .collect::<Result<Vec<_>>>()?;
    let data = CategoryData {
        ring: cat.ring(),
        labels: cat.objects().map(|a| cat.label(a).to_string()).collect(),
        homs,
        comp,
        identities,
    };
    let category = FiniteLinearCategory::new(data)
        .map_err(|e| Error::WellDefinedness(format!("induced composition: {e}")))?;
    Ok(QuotientCategory { category, presentations })
}

impl QuotientCategory {
    pub fn category(&self) -> &FiniteLinearCategory {
        &self.category
    }

    pub fn into_category(self) -> FiniteLinearCategory {
        self.category
    }

    pub fn presentation(&self, a: ObjectId, b: ObjectId) -> &Subquotient {
        &self.presentations[a.0 * self.category.object_count() + b.0]
    }

    /// The class of `f` in the quotient.
    pub fn project(&self, f: &Morphism) -> Result<Morphism> {
        let coords = self.presentation(f.source(), f.target()).project(f.coords())?;
        self.category.morphism(f.source(), f.target(), coords)
    }

    /// A representative of the class `f` in the original category.
    pub fn lift(&self, f: &Morphism) -> Morphism {
        Morphism::from_raw(f.source(), f.target(), self.presentation(f.source(), f.target()).lift(f.coords()))
    }
}
