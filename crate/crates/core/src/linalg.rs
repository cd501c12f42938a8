//! Exact linear algebra over residue rings `Z/m`.
//!
//! Every finitely generated `Z/m`-module that shows up in this crate is a
//! direct sum of cyclic groups `Z/d_1 ⊕ … ⊕ Z/d_r` with each `d_i | m`
//! ([`OrderVector`]). Subgroups are stored in Howell normal form, which is
//! canonical: two generating sets span the same subgroup exactly when their
//! Howell rows agree.
//!
//! Internally a vector `x` of `⊕ Z/d_i` is embedded into `(Z/L)^r`, with `L`
//! the exponent of the ambient group, by `x_i ↦ x_i · L/d_i`. Howell forms are
//! computed there and mapped back.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported modulus. Products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn to_residue(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// A unit `u` of `Z/m` with `u·a ≡ gcd(a, m)`.
fn unit_normalizer(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    let m2 = m / g;
    let a2 = (a / g) % m2.max(1);
    let u0 = if m2 <= 1 {
        1
    } else {
        let (_, s, _) = ext_gcd(a2 as i128, m2 as i128);
        to_residue(s, m2)
    };
    let mut u = u0;
    while gcd(u % m, m) != 1 {
        u += m2.max(1);
    }
    u % m
}

/// `s·a + t·b` over `Z/m`.
fn lin_comb(s: u64, a: &[u64], t: u64, b: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ((s as u128 * x as u128 + t as u128 * y as u128) % m as u128) as u64)
        .collect()
}

fn scale_row(s: u64, a: &[u64], m: u64) -> Vec<u64> {
    a.iter().map(|&x| mulmod(s, x, m)).collect()
}

/// `a - q·b` in place.
fn sub_multiple(a: &mut [u64], q: u64, b: &[u64], m: u64) {
    let q = q % m;
    if q == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = (*x + m - mulmod(q, y, m)) % m;
    }
}

fn is_zero_row(r: &[u64]) -> bool {
    r.iter().all(|&x| x == 0)
}

fn leading(r: &[u64]) -> Option<usize> {
    r.iter().position(|&x| x != 0)
}

/// Howell normal form of the row span of `rows` in `(Z/m)^ncols`.
pub(crate) fn howell(rows: Vec<Vec<u64>>, ncols: usize, m: u64) -> Vec<Vec<u64>> {
    if m <= 1 {
        return Vec::new();
    }
    let mut work: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x % m).collect::<Vec<_>>())
        .filter(|r| !is_zero_row(r))
        .collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for c in 0..ncols {
        let (with, rest): (Vec<_>, Vec<_>) = work.into_iter().partition(|r| r[c] != 0);
        work = rest;
        let mut with = with.into_iter();
        let Some(mut pivot) = with.next() else {
            continue;
        };
        for mut r in with {
            let a = pivot[c];
            let b = r[c];
            if b % a == 0 {
                sub_multiple(&mut r, b / a, &pivot, m);
                if !is_zero_row(&r) {
                    work.push(r);
                }
            } else {
                let (g, s, t) = ext_gcd(a as i128, b as i128);
                let new_pivot = lin_comb(to_residue(s, m), &pivot, to_residue(t, m), &r, m);
                let new_r = lin_comb(
                    to_residue(b as i128 / g, m),
                    &pivot,
                    to_residue(-(a as i128 / g), m),
                    &r,
                    m,
                );
                pivot = new_pivot;
                if !is_zero_row(&new_r) {
                    work.push(new_r);
                }
            }
        }
        let u = unit_normalizer(pivot[c], m);
        pivot = scale_row(u, &pivot, m);
        let p = pivot[c];
        let ann = scale_row(m / p, &pivot, m);
        if !is_zero_row(&ann) {
            work.push(ann);
        }
        out.push(pivot);
    }
    for k in 0..out.len() {
        let c = leading(&out[k]).expect("howell rows are nonzero");
        let p = out[k][c];
        let (head, tail) = out.split_at_mut(k);
        for row in head.iter_mut() {
            let q = row[c] / p;
            sub_multiple(row, q, &tail[0], m);
        }
    }
    out
}

/// Reduces `v` against Howell rows, returning the remainder and the
/// coefficient used for each row. Only rows whose pivot lies before
/// `stop_col` are used.
fn howell_reduce(basis: &[Vec<u64>], v: &[u64], m: u64, stop_col: usize) -> (Vec<u64>, Vec<u64>) {
    let mut v: Vec<u64> = v.iter().map(|x| x % m.max(1)).collect();
    let mut coeffs = vec![0u64; basis.len()];
    if m <= 1 {
        return (vec![0; v.len()], coeffs);
    }
    for (k, row) in basis.iter().enumerate() {
        let c = leading(row).expect("howell rows are nonzero");
        if c >= stop_col {
            break;
        }
        let p = row[c];
        if v[c] % p == 0 {
            let q = v[c] / p;
            sub_multiple(&mut v, q, row, m);
            coeffs[k] = q;
        }
    }
    (v, coeffs)
}

/// Diagonalizes a relation matrix over `Z/m` by unimodular row and column
/// operations. Returns the diagonal (length `ncols`, zero past the last row)
/// together with the column transform `V` and its inverse.
fn diagonalize(mut r: Vec<Vec<u64>>, ncols: usize, m: u64) -> (Vec<u64>, Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let ident = |n: usize| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j) % m).collect())
            .collect()
    };
    let mut v = ident(ncols);
    let mut vinv = ident(ncols);
    let nrows = r.len();
    let mut diag = vec![0u64; ncols];
    if m <= 1 {
        return (diag, v, vinv);
    }
    for row in r.iter_mut() {
        for x in row.iter_mut() {
            *x %= m;
        }
    }
    for k in 0..nrows.min(ncols) {
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in r.iter().enumerate().skip(k) {
            for (j, &x) in row.iter().enumerate().skip(k) {
                if x != 0 {
                    let g = gcd(x, m);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        r.swap(k, pi);
        if pj != k {
            for row in r.iter_mut() {
                row.swap(k, pj);
            }
            for row in v.iter_mut() {
                row.swap(k, pj);
            }
            vinv.swap(k, pj);
        }
        loop {
            let mut changed = false;
            for i in k + 1..nrows {
                if r[i][k] == 0 {
                    continue;
                }
                let a = r[k][k];
                let b = r[i][k];
                if b % a == 0 {
                    let pivot_row = r[k].clone();
                    sub_multiple(&mut r[i], b / a, &pivot_row, m);
                } else {
                    let (g, s, t) = ext_gcd(a as i128, b as i128);
                    let new_k = lin_comb(to_residue(s, m), &r[k], to_residue(t, m), &r[i], m);
                    let new_i = lin_comb(
                        to_residue(b as i128 / g, m),
                        &r[k],
                        to_residue(-(a as i128 / g), m),
                        &r[i],
                        m,
                    );
                    r[k] = new_k;
                    r[i] = new_i;
                    changed = true;
                }
            }
            for j in k + 1..ncols {
                if r[k][j] == 0 {
                    continue;
                }
                let a = r[k][k];
                let b = r[k][j];
                if b % a == 0 {
                    let q = b / a;
                    for row in r.iter_mut() {
                        row[j] = (row[j] + m - mulmod(q, row[k], m)) % m;
                    }
                    for row in v.iter_mut() {
                        row[j] = (row[j] + m - mulmod(q, row[k], m)) % m;
                    }
                    let row_j = vinv[j].clone();
                    for (x, y) in vinv[k].iter_mut().zip(row_j) {
                        *x = (*x + mulmod(q, y, m)) % m;
                    }
                } else {
                    let (g, s, t) = ext_gcd(a as i128, b as i128);
                    let (s, t) = (to_residue(s, m), to_residue(t, m));
                    let bg = to_residue(b as i128 / g, m);
                    let ag = to_residue(a as i128 / g, m);
                    let neg_bg = (m - bg) % m;
                    for row in r.iter_mut().chain(v.iter_mut()) {
                        let (x, y) = (row[k], row[j]);
                        row[k] = (mulmod(s, x, m) + mulmod(t, y, m)) % m;
                        row[j] = (mulmod(neg_bg, x, m) + mulmod(ag, y, m)) % m;
                    }
                    let new_k = lin_comb(ag, &vinv[k], bg, &vinv[j], m);
                    let new_j = lin_comb((m - t) % m, &vinv[k], s, &vinv[j], m);
                    vinv[k] = new_k;
                    vinv[j] = new_j;
                    changed = true;
                }
            }
            let column_clear = (k + 1..nrows).all(|i| r[i][k] == 0);
            if !changed && column_clear {
                break;
            }
        }
        diag[k] = r[k][k];
    }
    (diag, v, vinv)
}

/// The coefficient ring `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueRing {
    modulus: u64,
}

impl ResidueRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&modulus) {
            return Err(Error::ModulusOutOfRange(modulus));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Orders `(d_1, …, d_r)` of the cyclic summands of `⊕ Z/d_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderVector(Vec<u64>);

impl OrderVector {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        for &d in &orders {
            if d == 0 || d > MAX_MODULUS {
                return Err(Error::InvalidOrder(d));
            }
        }
        Ok(Self(orders))
    }

    /// Builds an order vector whose entries all divide `ring`'s modulus.
    pub fn over(ring: ResidueRing, orders: Vec<u64>) -> Result<Self> {
        for &d in &orders {
            if d == 0 || ring.modulus() % d != 0 {
                return Err(Error::OrderDoesNotDivide { order: d, modulus: ring.modulus() });
            }
        }
        Ok(Self(orders))
    }

    /// The zero group.
    pub fn trivial() -> Self {
        Self(Vec::new())
    }

    pub fn orders(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Group order `∏ d_i`.
    pub fn group_order(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }

    /// Exponent `lcm(d_i)`; 1 for the zero group.
    pub fn exponent(&self) -> u64 {
        self.0.iter().fold(1, |acc, &d| lcm(acc, d))
    }

    pub fn concat(&self, other: &OrderVector) -> OrderVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        OrderVector(v)
    }

    pub fn zero(&self) -> ElementVector {
        ElementVector(vec![0; self.rank()])
    }

    pub fn unit(&self, i: usize) -> ElementVector {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.0[i];
        ElementVector(v)
    }

    /// Reduces arbitrary integer coordinates into canonical range.
    pub fn element(&self, coords: &[i64]) -> Result<ElementVector> {
        if coords.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), found: coords.len() });
        }
        Ok(ElementVector(
            coords
                .iter()
                .zip(&self.0)
                .map(|(&x, &d)| x.rem_euclid(d as i64) as u64)
                .collect(),
        ))
    }

    pub fn check(&self, x: &ElementVector) -> Result<()> {
        if x.0.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), found: x.0.len() });
        }
        if x.0.iter().zip(&self.0).any(|(&c, &d)| c >= d) {
            return Err(Error::WellDefinedness(format!("coordinates {x} out of range for {self}")));
        }
        Ok(())
    }

    pub fn add(&self, x: &ElementVector, y: &ElementVector) -> ElementVector {
        ElementVector(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.0)
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect(),
        )
    }

    pub fn neg(&self, x: &ElementVector) -> ElementVector {
        ElementVector(x.0.iter().zip(&self.0).map(|(&a, &d)| (d - a) % d).collect())
    }

    pub fn sub(&self, x: &ElementVector, y: &ElementVector) -> ElementVector {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, s: u64, x: &ElementVector) -> ElementVector {
        ElementVector(x.0.iter().zip(&self.0).map(|(&a, &d)| mulmod(s % d, a, d)).collect())
    }

    /// All elements in mixed-radix order (first coordinate fastest).
    pub fn elements(&self) -> Elements<'_> {
        Elements { orders: &self.0, next: Some(vec![0; self.rank()]) }
    }

    fn embed(&self, x: &[u64]) -> Vec<u64> {
        let l = self.exponent();
        x.iter().zip(&self.0).map(|(&a, &d)| a * (l / d)).collect()
    }

    fn unembed(&self, x: &[u64]) -> ElementVector {
        let l = self.exponent();
        ElementVector(
            x.iter()
                .zip(&self.0)
                .map(|(&a, &d)| {
                    let s = l / d;
                    debug_assert_eq!(a % s, 0, "embedded coordinate not divisible");
                    (a / s) % d
                })
                .collect(),
        )
    }
}

impl fmt::Display for OrderVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

pub struct Elements<'a> {
    orders: &'a [u64],
    next: Option<Vec<u64>>,
}

impl Iterator for Elements<'_> {
    type Item = ElementVector;

    fn next(&mut self) -> Option<ElementVector> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut carry = true;
        for (x, &d) in succ.iter_mut().zip(self.orders) {
            *x += 1;
            if *x < d {
                carry = false;
                break;
            }
            *x = 0;
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(ElementVector(cur))
    }
}

/// Coordinates of an element of `⊕ Z/d_i`, coordinate `i` in `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementVector(pub(crate) Vec<u64>);

impl ElementVector {
    pub fn new(coords: Vec<u64>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for ElementVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A subgroup of `⊕ Z/d_i`, held as its Howell basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubgroupBasis {
    ambient: OrderVector,
    rows: Vec<ElementVector>,
}

impl SubgroupBasis {
    /// Howell form of the subgroup generated by `rows`.
    pub fn howell_form(rows: &[ElementVector], ambient: &OrderVector) -> Result<Self> {
        for r in rows {
            if r.0.len() != ambient.rank() {
                return Err(Error::LengthMismatch { expected: ambient.rank(), found: r.0.len() });
            }
        }
        Ok(Self::from_embedded(
            rows.iter().map(|r| ambient.embed(&r.0)).collect(),
            ambient,
        ))
    }

    fn from_embedded(rows: Vec<Vec<u64>>, ambient: &OrderVector) -> Self {
        let l = ambient.exponent();
        let h = howell(rows, ambient.rank(), l);
        Self {
            ambient: ambient.clone(),
            rows: h.iter().map(|r| ambient.unembed(r)).collect(),
        }
    }

    pub fn zero(ambient: &OrderVector) -> Self {
        Self { ambient: ambient.clone(), rows: Vec::new() }
    }

    pub fn full(ambient: &OrderVector) -> Self {
        let units: Vec<ElementVector> = (0..ambient.rank()).map(|i| ambient.unit(i)).collect();
        Self::howell_form(&units, ambient).expect("unit vectors have ambient length")
    }

    pub fn ambient(&self) -> &OrderVector {
        &self.ambient
    }

    pub fn rows(&self) -> &[ElementVector] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(&self.ambient)
    }

    fn embedded_rows(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| self.ambient.embed(&r.0)).collect()
    }

    /// Number of elements of the subgroup.
    pub fn order(&self) -> u128 {
        let l = self.ambient.exponent();
        self.embedded_rows()
            .iter()
            .map(|r| {
                let p = r[leading(r).expect("nonzero row")];
                (l / p) as u128
            })
            .product()
    }

    pub fn contains(&self, x: &ElementVector) -> Result<bool> {
        self.ambient.check(x)?;
        let l = self.ambient.exponent();
        let (rem, _) = howell_reduce(&self.embedded_rows(), &self.ambient.embed(&x.0), l, usize::MAX);
        Ok(is_zero_row(&rem))
    }

    /// Coefficients `c` with `x = Σ c_k · rows[k]`, or `None` if `x` is not a member.
    pub fn coefficients(&self, x: &ElementVector) -> Option<Vec<u64>> {
        let l = self.ambient.exponent();
        let (rem, c) = howell_reduce(&self.embedded_rows(), &self.ambient.embed(&x.0), l, usize::MAX);
        is_zero_row(&rem).then_some(c)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupBasis) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &SubgroupBasis) -> Result<SubgroupBasis> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut rows = self.embedded_rows();
        rows.extend(other.embedded_rows());
        Ok(Self::from_embedded(rows, &self.ambient))
    }

    /// `A ∩ B` as the kernel of the stacked difference map.
    pub fn intersect(&self, other: &SubgroupBasis) -> Result<SubgroupBasis> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let r = self.ambient.rank();
        let l = self.ambient.exponent();
        let mut rows = Vec::new();
        for a in self.embedded_rows() {
            let mut row = a.clone();
            row.extend(a);
            rows.push(row);
        }
        for b in other.embedded_rows() {
            let mut row = b;
            row.extend(std::iter::repeat_n(0, r));
            rows.push(row);
        }
        let h = howell(rows, 2 * r, l);
        let inter: Vec<Vec<u64>> = h
            .into_iter()
            .filter(|row| is_zero_row(&row[..r]))
            .map(|row| row[r..].to_vec())
            .collect();
        Ok(Self::from_embedded(inter, &self.ambient))
    }

    /// Every element of the subgroup, generated by enumerating coefficient
    /// tuples of the Howell rows.
    pub fn elements(&self) -> Vec<ElementVector> {
        let l = self.ambient.exponent();
        let emb = self.embedded_rows();
        let mut out = vec![self.ambient.zero()];
        for (row, erow) in self.rows.iter().zip(&emb) {
            let p = erow[leading(erow).expect("nonzero row")];
            let mult = l / p;
            let mut next = Vec::with_capacity(out.len() * mult as usize);
            for x in &out {
                let mut cur = x.clone();
                for _ in 0..mult {
                    next.push(cur.clone());
                    cur = self.ambient.add(&cur, row);
                }
            }
            out = next;
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for SubgroupBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "<0>");
        }
        let parts: Vec<String> = self.rows.iter().map(ElementVector::to_string).collect();
        write!(f, "<{}>", parts.join(" "))
    }
}

/// A homomorphism `⊕ Z/d_i → ⊕ Z/e_j`, stored as the images of the source
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupHom {
    source: OrderVector,
    target: OrderVector,
    columns: Vec<ElementVector>,
}

impl GroupHom {
    /// Checks that `d_i · column_i = 0` for every source generator.
    pub fn new(source: OrderVector, target: OrderVector, columns: Vec<ElementVector>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::LengthMismatch { expected: source.rank(), found: columns.len() });
        }
        for (i, c) in columns.iter().enumerate() {
            target.check(c)?;
            if !target.scale(source.orders()[i], c).is_zero() {
                return Err(Error::WellDefinedness(format!(
                    "generator {i} of order {} maps to {c}",
                    source.orders()[i]
                )));
            }
        }
        Ok(Self { source, target, columns })
    }

    pub fn zero(source: &OrderVector, target: &OrderVector) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            columns: vec![target.zero(); source.rank()],
        }
    }

    pub fn identity(g: &OrderVector) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            columns: (0..g.rank()).map(|i| g.unit(i)).collect(),
        }
    }

    pub fn source(&self) -> &OrderVector {
        &self.source
    }

    pub fn target(&self) -> &OrderVector {
        &self.target
    }

    pub fn columns(&self) -> &[ElementVector] {
        &self.columns
    }

    pub fn apply(&self, x: &ElementVector) -> ElementVector {
        let mut acc = self.target.zero();
        for (&c, col) in x.0.iter().zip(&self.columns) {
            if c != 0 {
                acc = self.target.add(&acc, &self.target.scale(c, col));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.target != self.source {
            return Err(Error::Composability(format!("{} vs {}", other.target, self.source)));
        }
        Ok(GroupHom {
            source: other.source.clone(),
            target: self.target.clone(),
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::AmbientMismatch);
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| self.target.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: u64) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            columns: self.columns.iter().map(|c| self.target.scale(s, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(ElementVector::is_zero)
    }

    /// Stacks the columns of several maps out of the same source into one map
    /// into the direct sum of their targets.
    pub fn stack(source: &OrderVector, maps: &[GroupHom]) -> Result<GroupHom> {
        let mut target = OrderVector::trivial();
        for h in maps {
            if h.source != *source {
                return Err(Error::AmbientMismatch);
            }
            target = target.concat(&h.target);
        }
        let columns = (0..source.rank())
            .map(|i| {
                let mut v = Vec::with_capacity(target.rank());
                for h in maps {
                    v.extend_from_slice(&h.columns[i].0);
                }
                ElementVector(v)
            })
            .collect();
        Ok(GroupHom { source: source.clone(), target, columns })
    }

    fn modulus(&self) -> u64 {
        lcm(self.source.exponent(), self.target.exponent())
    }

    /// Rows `[emb(h(e_i)) | e_i]` over `Z/L`.
    fn augmented_rows(&self, l: u64) -> Vec<Vec<u64>> {
        let s = self.target.rank();
        let r = self.source.rank();
        let scale = l / self.target.exponent();
        (0..r)
            .map(|i| {
                let mut row: Vec<u64> = self
                    .target
                    .embed(&self.columns[i].0)
                    .into_iter()
                    .map(|x| x * scale % l)
                    .collect();
                row.extend((0..r).map(|j| u64::from(i == j)));
                debug_assert_eq!(row.len(), s + r);
                row
            })
            .collect()
    }

    pub fn kernel(&self) -> SubgroupBasis {
        let l = self.modulus();
        let s = self.target.rank();
        let r = self.source.rank();
        let h = howell(self.augmented_rows(l), s + r, l);
        let gens: Vec<ElementVector> = h
            .into_iter()
            .filter(|row| is_zero_row(&row[..s]))
            .map(|row| {
                ElementVector(
                    row[s..]
                        .iter()
                        .zip(self.source.orders())
                        .map(|(&x, &d)| x % d)
                        .collect(),
                )
            })
            .collect();
        SubgroupBasis::howell_form(&gens, &self.source).expect("kernel rows have source length")
    }

    pub fn image(&self) -> SubgroupBasis {
        SubgroupBasis::howell_form(&self.columns, &self.target).expect("columns have target length")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    /// Some `x` with `h(x) = y`, if one exists.
    pub fn solve(&self, y: &ElementVector) -> Result<Option<ElementVector>> {
        self.target.check(y)?;
        let l = self.modulus();
        let s = self.target.rank();
        let r = self.source.rank();
        if l <= 1 {
            return Ok(Some(self.source.zero()));
        }
        let h = howell(self.augmented_rows(l), s + r, l);
        let scale = l / self.target.exponent();
        let mut v: Vec<u64> = self.target.embed(&y.0).into_iter().map(|x| x * scale % l).collect();
        v.extend(std::iter::repeat_n(0, r));
        let (rem, _) = howell_reduce(&h, &v, l, s);
        if !is_zero_row(&rem[..s]) {
            return Ok(None);
        }
        let x = ElementVector(
            rem[s..]
                .iter()
                .zip(self.source.orders())
                .map(|(&c, &d)| ((l - c) % l) % d)
                .collect(),
        );
        debug_assert_eq!(self.apply(&x), *y);
        Ok(Some(x))
    }
}

/// Invariant factors `f_1 | f_2 | … | f_s` of a finite abelian group, each
/// `f_j ≥ 2`. Empty for the trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantFactors(Vec<u64>);

pub(crate) fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl InvariantFactors {
    /// Invariant factors of `⊕ Z/o_k` for arbitrary cyclic orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &o in orders {
            for (p, q) in prime_powers(o) {
                by_prime.entry(p).or_default().push(q);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, q) in powers.iter().enumerate() {
                factors[len - 1 - i] *= q;
            }
        }
        Self(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn group_order(&self) -> u128 {
        self.0.iter().map(|&f| f as u128).product()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Invariant factors of `ambient / sub`.
pub fn quotient_invariants(ambient: &OrderVector, sub: &SubgroupBasis) -> Result<InvariantFactors> {
    let sq = Subquotient::new(SubgroupBasis::full(ambient), sub.clone())?;
    Ok(sq.invariants())
}

/// Invariant factors of `Hom(⊕ Z/p_i, ⊕ Z/h_j) ≅ ⊕ Z/gcd(p_i, h_j)`.
pub fn hom_invariants(source: &[u64], target: &[u64]) -> InvariantFactors {
    let orders: Vec<u64> = source
        .iter()
        .flat_map(|&p| target.iter().map(move |&h| gcd(p, h)))
        .collect();
    InvariantFactors::from_cyclic_orders(&orders)
}

/// An explicit presentation of `N / D` for subgroups `D ⊆ N` of a common
/// ambient group: cyclic orders for the quotient, a projection from `N` onto
/// quotient coordinates, and a lift of each quotient generator back to `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subquotient {
    numerator: SubgroupBasis,
    denominator: SubgroupBasis,
    orders: OrderVector,
    /// `t × k` block of the column transform (numerator generator → quotient coordinate).
    projection: Vec<Vec<u64>>,
    lifts: Vec<ElementVector>,
}

impl Subquotient {
    pub fn new(numerator: SubgroupBasis, denominator: SubgroupBasis) -> Result<Self> {
        if numerator.ambient != denominator.ambient {
            return Err(Error::AmbientMismatch);
        }
        if !denominator.is_subgroup_of(&numerator)? {
            return Err(Error::ContainmentViolation);
        }
        let ambient = numerator.ambient.clone();
        let l = ambient.exponent();
        let gens = numerator.embedded_rows();
        let t = gens.len();
        let s = ambient.rank();
        let mut relations: Vec<Vec<u64>> = Vec::new();
        // relations among the numerator generators themselves
        let aug: Vec<Vec<u64>> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut row = g.clone();
                row.extend((0..t).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for row in howell(aug, s + t, l) {
            if is_zero_row(&row[..s]) {
                relations.push(row[s..].to_vec());
            }
        }
        for d in &denominator.rows {
            let c = numerator
                .coefficients(d)
                .ok_or(Error::ContainmentViolation)?;
            relations.push(c);
        }
        let (diag, v, vinv) = diagonalize(relations, t, l);
        let mut orders = Vec::new();
        let mut keep = Vec::new();
        for (k, &dk) in diag.iter().enumerate() {
            let o = if dk == 0 { l } else { gcd(dk, l) };
            if o > 1 {
                orders.push(o);
                keep.push(k);
            }
        }
        let projection: Vec<Vec<u64>> = v
            .iter()
            .map(|row| keep.iter().map(|&k| row[k]).collect())
            .collect();
        let lifts = keep
            .iter()
            .map(|&k| {
                let mut acc = vec![0u64; s];
                for (c, g) in vinv[k].iter().zip(&gens) {
                    for (a, &x) in acc.iter_mut().zip(g) {
                        *a = (*a + mulmod(*c, x, l)) % l;
                    }
                }
                ambient.unembed(&acc)
            })
            .collect();
        Ok(Self {
            numerator,
            denominator,
            orders: OrderVector(orders),
            projection,
            lifts,
        })
    }

    pub fn ambient(&self) -> &OrderVector {
        &self.numerator.ambient
    }

    pub fn numerator(&self) -> &SubgroupBasis {
        &self.numerator
    }

    pub fn denominator(&self) -> &SubgroupBasis {
        &self.denominator
    }

    /// Cyclic orders of the quotient presentation (not necessarily a
    /// divisibility chain).
    pub fn orders(&self) -> &OrderVector {
        &self.orders
    }

    pub fn invariants(&self) -> InvariantFactors {
        InvariantFactors::from_cyclic_orders(self.orders.orders())
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.rank() == 0
    }

    pub fn lifts(&self) -> &[ElementVector] {
        &self.lifts
    }

    /// Quotient coordinates of a numerator element.
    pub fn project(&self, x: &ElementVector) -> Result<ElementVector> {
        let c = self.numerator.coefficients(x).ok_or(Error::ContainmentViolation)?;
        Ok(ElementVector(
            self.orders
                .orders()
                .iter()
                .enumerate()
                .map(|(k, &o)| {
                    c.iter()
                        .zip(&self.projection)
                        .fold(0u64, |acc, (&ci, row)| (acc + mulmod(ci % o, row[k] % o, o)) % o)
                })
                .collect(),
        ))
    }

    /// A numerator representative of the given quotient coordinates.
    pub fn lift(&self, y: &ElementVector) -> ElementVector {
        let amb = self.ambient();
        let mut acc = amb.zero();
        for (&c, g) in y.0.iter().zip(&self.lifts) {
            acc = amb.add(&acc, &amb.scale(c, g));
        }
        acc
    }

    /// The map on quotient presentations induced by an ambient homomorphism
    /// `h` with `h(N_S) ⊆ N_T` and `h(D_S) ⊆ D_T`.
    pub fn induced(h: &GroupHom, source: &Subquotient, target: &Subquotient) -> Result<GroupHom> {
        if h.source() != source.ambient() || h.target() != target.ambient() {
            return Err(Error::AmbientMismatch);
        }
        for r in source.numerator.rows() {
            if !target.numerator.contains(&h.apply(r))? {
                return Err(Error::WellDefinedness("numerator not mapped into numerator".into()));
            }
        }
        for r in source.denominator.rows() {
            if !target.denominator.contains(&h.apply(r))? {
                return Err(Error::WellDefinedness("denominator not mapped into denominator".into()));
            }
        }
        let columns = source
            .lifts
            .iter()
            .map(|x| target.project(&h.apply(x)))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(source.orders.clone(), target.orders.clone(), columns)
    }
}

/// Map induced by `h` on `source/sub_s → target/sub_t`.
pub fn induced_on_quotient(h: &GroupHom, sub_s: &SubgroupBasis, sub_t: &SubgroupBasis) -> Result<GroupHom> {
    let s = Subquotient::new(SubgroupBasis::full(h.source()), sub_s.clone())?;
    let t = Subquotient::new(SubgroupBasis::full(h.target()), sub_t.clone())?;
    Subquotient::induced(h, &s, &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(v: &[u64]) -> OrderVector {
        OrderVector::new(v.to_vec()).unwrap()
    }

    fn ev(v: &[u64]) -> ElementVector {
        ElementVector::new(v.to_vec())
    }

    fn hom(src: &[u64], tgt: &[u64], cols: &[&[u64]]) -> GroupHom {
        GroupHom::new(ov(src), ov(tgt), cols.iter().map(|c| ev(c)).collect()).unwrap()
    }

    fn brute(sub: &SubgroupBasis) -> Vec<ElementVector> {
        let amb = sub.ambient();
        let mut out: Vec<ElementVector> = amb.elements().filter(|x| sub.contains(x).unwrap()).collect();
        out.sort();
        out
    }

    #[test]
    fn howell_of_single_row() {
        let a = ov(&[4, 4]);
        let s = SubgroupBasis::howell_form(&[ev(&[2, 2])], &a).unwrap();
        assert_eq!(s.rows(), &[ev(&[2, 2])]);
        assert_eq!(brute(&s), vec![ev(&[0, 0]), ev(&[2, 2])]);
    }

    #[test]
    fn howell_empty_and_full() {
        let a = ov(&[4, 4]);
        assert!(SubgroupBasis::howell_form(&[], &a).unwrap().is_zero());
        let f = SubgroupBasis::howell_form(&[ev(&[1, 0]), ev(&[0, 1])], &ov(&[2, 2])).unwrap();
        assert!(f.is_full());
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let err = SubgroupBasis::howell_form(&[ev(&[1])], &ov(&[2, 2])).unwrap_err();
        assert_eq!(err, Error::LengthMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn kernel_examples() {
        let two = hom(&[4], &[4], &[&[2]]);
        assert_eq!(brute(&two.kernel()), vec![ev(&[0]), ev(&[2])]);
        assert!(hom(&[6], &[6], &[&[1]]).kernel().is_zero());
        let can = hom(&[4], &[2], &[&[1]]);
        assert_eq!(brute(&can.kernel()), vec![ev(&[0]), ev(&[2])]);
    }

    #[test]
    fn image_examples() {
        assert!(GroupHom::zero(&ov(&[4]), &ov(&[4])).image().is_zero());
        assert_eq!(brute(&hom(&[4], &[4], &[&[2]]).image()), vec![ev(&[0]), ev(&[2])]);
        assert_eq!(brute(&hom(&[2], &[4], &[&[2]]).image()), vec![ev(&[0]), ev(&[2])]);
    }

    #[test]
    fn sum_and_intersection() {
        let a = ov(&[2, 2]);
        let x = SubgroupBasis::howell_form(&[ev(&[1, 0])], &a).unwrap();
        let y = SubgroupBasis::howell_form(&[ev(&[0, 1])], &a).unwrap();
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.intersect(&x).unwrap(), x);
        let b = ov(&[4, 4]);
        let p = SubgroupBasis::howell_form(&[ev(&[2, 0])], &b).unwrap();
        let q = SubgroupBasis::howell_form(&[ev(&[0, 2])], &b).unwrap();
        let s = p.sum(&q).unwrap();
        assert_eq!(
            brute(&s),
            vec![ev(&[0, 0]), ev(&[0, 2]), ev(&[2, 0]), ev(&[2, 2])]
        );
        assert_eq!(p.sum(&SubgroupBasis::zero(&a)), Err(Error::AmbientMismatch));
    }

    #[test]
    fn membership() {
        let a = ov(&[4, 4]);
        let s = SubgroupBasis::howell_form(&[ev(&[2, 2])], &a).unwrap();
        assert!(!s.contains(&ev(&[0, 2])).unwrap());
        assert!(s.contains(&ev(&[0, 0])).unwrap());
        assert!(SubgroupBasis::full(&a).contains(&ev(&[3, 1])).unwrap());
    }

    #[test]
    fn quotient_invariant_examples() {
        let z4 = ov(&[4]);
        let half = SubgroupBasis::howell_form(&[ev(&[2])], &z4).unwrap();
        assert_eq!(quotient_invariants(&z4, &half).unwrap().factors(), &[2]);
        assert!(quotient_invariants(&z4, &SubgroupBasis::full(&z4)).unwrap().is_trivial());
        let a = ov(&[2, 4]);
        let s = SubgroupBasis::howell_form(&[ev(&[1, 2])], &a).unwrap();
        assert_eq!(quotient_invariants(&a, &s).unwrap().factors(), &[4]);
        assert_eq!(
            quotient_invariants(&ov(&[6, 4]), &SubgroupBasis::zero(&ov(&[6, 4]))).unwrap().factors(),
            &[2, 12]
        );
    }

    #[test]
    fn induced_examples() {
        let z4 = ov(&[4]);
        let half = SubgroupBasis::howell_form(&[ev(&[2])], &z4).unwrap();
        let id = GroupHom::identity(&z4);
        let ind = induced_on_quotient(&id, &half, &half).unwrap();
        assert_eq!(ind, GroupHom::identity(&ov(&[2])));
        let can = hom(&[4], &[2], &[&[1]]);
        let ind = induced_on_quotient(&can, &half, &SubgroupBasis::full(&ov(&[2]))).unwrap();
        assert_eq!(ind.target().rank(), 0);
        assert!(ind.is_zero());
        // h(subS) ⊄ subT
        let err = induced_on_quotient(&id, &SubgroupBasis::full(&z4), &half).unwrap_err();
        assert!(matches!(err, Error::WellDefinedness(_)));
    }

    #[test]
    fn ill_defined_hom_rejected() {
        assert!(GroupHom::new(ov(&[4]), ov(&[2]), vec![ev(&[1])]).is_ok());
        assert!(GroupHom::new(ov(&[2]), ov(&[4]), vec![ev(&[1])]).is_err());
    }

    #[test]
    fn solve_finds_preimages() {
        let two = hom(&[4], &[4], &[&[2]]);
        let x = two.solve(&ev(&[2])).unwrap().unwrap();
        assert_eq!(two.apply(&x), ev(&[2]));
        assert!(two.solve(&ev(&[1])).unwrap().is_none());
    }

    #[test]
    fn trivial_group_is_accepted() {
        let z = OrderVector::trivial();
        assert!(SubgroupBasis::full(&z).is_zero());
        let h = GroupHom::zero(&z, &ov(&[4]));
        assert!(h.kernel().is_zero());
        assert!(h.image().is_zero());
        assert!(quotient_invariants(&z, &SubgroupBasis::zero(&z)).unwrap().is_trivial());
        assert_eq!(z.elements().count(), 1);
    }

    #[test]
    fn invariant_factor_chain() {
        assert_eq!(InvariantFactors::from_cyclic_orders(&[2, 3]).factors(), &[6]);
        assert_eq!(InvariantFactors::from_cyclic_orders(&[4, 2, 2]).factors(), &[2, 2, 4]);
        assert_eq!(InvariantFactors::from_cyclic_orders(&[1, 1]).factors(), &[] as &[u64]);
        assert_eq!(hom_invariants(&[4], &[2]).factors(), &[2]);
    }

    #[test]
    fn subquotient_roundtrip() {
        let a = ov(&[2, 4, 4]);
        let num = SubgroupBasis::howell_form(&[ev(&[1, 2, 0]), ev(&[0, 1, 1])], &a).unwrap();
        let den = SubgroupBasis::howell_form(&[ev(&[0, 2, 2])], &a).unwrap();
        let sq = Subquotient::new(num.clone(), den.clone()).unwrap();
        assert_eq!(sq.invariants().group_order() * den.order(), num.order());
        for (k, l) in sq.lifts().iter().enumerate() {
            assert_eq!(sq.project(l).unwrap(), sq.orders().unit(k));
        }
        for x in num.elements() {
            let y = sq.project(&x).unwrap();
            let back = sq.lift(&y);
            assert!(den.contains(&a.sub(&x, &back)).unwrap());
        }
    }
}
