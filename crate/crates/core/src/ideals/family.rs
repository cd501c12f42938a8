use std::ptr;

use serde::Serialize;

use super::{Ideal, Side};
use crate::error::{Error, Result};
use crate::lincat::{FiniteLinearCategory, Morphism, ObjectId};
use crate::linalg::{GroupHom, InvariantFactors, Subquotient};

/// A module over the category given by a quotient of one-sided ideals at a
/// fixed anchor `A`.
///
/// For right ideals `F(X) = I(X,A)/J(X,A)`, acted on contravariantly by
/// pre-composition. For left ideals `F(X) = I(A,X)/J(A,X)`, acted on
/// covariantly by post-composition.
#[derive(Clone, Debug)]
pub struct ModuleFamily<'c> {
    cat: &'c FiniteLinearCategory,
    side: Side,
    anchor: ObjectId,
    groups: Vec<Subquotient>,
}

/// Serializable per-object summary of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyTable {
    pub side: Side,
    pub anchor: String,
    pub rows: Vec<(String, InvariantFactors)>,
}

/// `(I/J)_A` for one anchor `A`.
pub fn quotient_family<'c>(i: &Ideal<'c>, j: &Ideal<'c>, anchor: ObjectId) -> Result<ModuleFamily<'c>> {
    if !ptr::eq(i.category(), j.category()) {
        return Err(Error::CategoryMismatch);
    }
    if i.side() != j.side() || i.side() == Side::TwoSided {
        return Err(Error::SideMismatch(format!(
            "quotient of a {} ideal by a {} ideal",
            i.side(),
            j.side()
        )));
    }
    let cat = i.category();
    let groups = cat
        .objects()
        .map(|x| {
            let (a, b) = if i.side() == Side::Right { (x, anchor) } else { (anchor, x) };
            Subquotient::new(i.component(a, b).clone(), j.component(a, b).clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleFamily { cat, side: i.side(), anchor, groups })
}

/// One family per anchor of `I`.
pub fn quotient_ideals<'c>(i: &Ideal<'c>, j: &Ideal<'c>) -> Result<Vec<ModuleFamily<'c>>> {
    if !j.is_subideal_of(i) {
        return Err(Error::ContainmentViolation);
    }
    i.anchors().iter().map(|&a| quotient_family(i, j, a)).collect()
}

impl<'c> ModuleFamily<'c> {
    pub fn category(&self) -> &'c FiniteLinearCategory {
        self.cat
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn anchor(&self) -> ObjectId {
        self.anchor
    }

    pub fn group(&self, x: ObjectId) -> &Subquotient {
        &self.groups[x.0]
    }

    pub fn invariants(&self, x: ObjectId) -> InvariantFactors {
        self.groups[x.0].invariants()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(Subquotient::is_trivial)
    }

    /// The action of `φ` on the family: `F(cod φ) → F(dom φ)` for right
    /// families, `F(dom φ) → F(cod φ)` for left ones.
    pub fn action(&self, phi: &Morphism) -> Result<GroupHom> {
        if self.side == Side::Right {
            let h = self.cat.pre_compose_hom(phi, self.anchor);
            Subquotient::induced(&h, self.group(phi.target()), self.group(phi.source()))
        } else {
            let h = self.cat.post_compose_hom(phi, self.anchor);
            Subquotient::induced(&h, self.group(phi.source()), self.group(phi.target()))
        }
    }

    /// Identity and composition laws on all basis morphisms.
    pub fn check_functoriality(&self) -> Result<bool> {
        let cat = self.cat;
        for x in cat.objects() {
            let id = self.action(&cat.identity(x))?;
            if id != GroupHom::identity(self.group(x).orders()) {
                return Ok(false);
            }
        }
        for a in cat.objects() {
            for b in cat.objects() {
                for c in cat.objects() {
                    for f in cat.basis(a, b) {
                        for g in cat.basis(b, c) {
                            let gf = self.action(&cat.compose(&g, &f)?)?;
                            let (af, ag) = (self.action(&f)?, self.action(&g)?);
                            let composite = if self.side == Side::Right { af.compose(&ag)? } else { ag.compose(&af)? };
                            if gf != composite {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn table(&self) -> FamilyTable {
        FamilyTable {
            side: self.side,
            anchor: self.cat.label(self.anchor).to_string(),
            rows: self
                .cat
                .objects()
                .map(|x| (self.cat.label(x).to_string(), self.invariants(x)))
                .collect(),
        }
    }
}
