//! Band-limited realizations of the contact superalgebras on 1|N
//! variables: generating functions are Laurent monomials t^d·θ_S inside a
//! degree window [-M, M], the bracket is the contact bracket, and for
//! N = 6 the residue pairing supplies the invariant form.
//!
//! Products that leave the window are recorded as escapes on the built
//! algebra, so every downstream check is window-conditional by
//! construction.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::grassmann::{mask_label, GrassmannElement, Mask, ZetaVector};
use crate::lie::{BilinearForm, Grading, LieSuperAlgebra};
use crate::linalg::Mat;
use crate::par;
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};

/// A generating function: sparse coefficients on Laurent-θ monomials
/// `t^d·θ_S`, with unbounded t-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactFunction {
    n: usize,
    coeffs: BTreeMap<(i64, Mask), Scalar>,
}

impl ContactFunction {
    pub fn zero(n: usize) -> Self {
        ContactFunction {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, t_deg: i64, mask: Mask, c: Scalar) -> Self {
        let mut f = Self::zero(n);
        f.add_term(t_deg, mask, &c);
        f
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 0, Scalar::one())
    }

    pub fn t_power(n: usize, d: i64) -> Self {
        Self::monomial(n, d, 0, Scalar::one())
    }

    pub fn theta(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        Self::monomial(n, 0, 1 << (i - 1), Scalar::one())
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, Mask), &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, t_deg: i64, mask: Mask) -> Scalar {
        self.coeffs
            .get(&(t_deg, mask))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, t_deg: i64, mask: Mask, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&(t_deg, mask)) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&(t_deg, mask));
                }
            }
            None => {
                self.coeffs.insert((t_deg, mask), c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ContactFunction, c: &Scalar) {
        assert_eq!(self.n, other.n);
        for ((d, m), v) in other.terms() {
            self.add_term(d, m, &(v * c));
        }
    }

    /// Product: wedge on the θ part, degree addition on the t part.
    pub fn mul(&self, other: &ContactFunction) -> ContactFunction {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for ((d1, m1), a) in self.terms() {
            for ((d2, m2), b) in other.terms() {
                if let Some(sign) = grassmann_merge_sign(m1, m2) {
                    out.add_term(d1 + d2, m1 | m2, &(a * b).mul_int(sign));
                }
            }
        }
        out
    }

    pub fn partial_t(&self) -> ContactFunction {
        let mut out = Self::zero(self.n);
        for ((d, m), c) in self.terms() {
            if d != 0 {
                out.add_term(d - 1, m, &c.mul_int(d));
            }
        }
        out
    }

    pub fn partial_theta(&self, i: usize) -> ContactFunction {
        assert!((1..=self.n).contains(&i));
        let bit = 1 << (i - 1);
        let mut out = Self::zero(self.n);
        for ((d, m), c) in self.terms() {
            if m & bit != 0 {
                let below = (m & (bit - 1)).count_ones();
                let sign = if below % 2 == 0 { 1 } else { -1 };
                out.add_term(d, m & !bit, &c.mul_int(sign));
            }
        }
        out
    }

    /// Weight operator Δ(f) = 2f - Σ θ_j ∂_j f; multiplies a monomial of
    /// θ-degree k by (2 - k).
    pub fn delta_weight(&self) -> ContactFunction {
        let mut out = Self::zero(self.n);
        for ((d, m), c) in self.terms() {
            out.add_term(d, m, &c.mul_int(2 - m.count_ones() as i64));
        }
        out
    }

    pub fn parity_split(&self) -> (ContactFunction, ContactFunction) {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for ((d, m), c) in self.terms() {
            if m.count_ones() % 2 == 0 {
                even.add_term(d, m, c);
            } else {
                odd.add_term(d, m, c);
            }
        }
        (even, odd)
    }

    /// Multiplies by a pure θ element (t-degree preserved).
    pub fn mul_theta(&self, g: &GrassmannElement) -> ContactFunction {
        assert_eq!(self.n, g.generators());
        let mut out = Self::zero(self.n);
        for ((d, m1), a) in self.terms() {
            for (m2, b) in g.terms() {
                if let Some(sign) = grassmann_merge_sign(m1, m2) {
                    out.add_term(d, m1 | m2, &(a * b).mul_int(sign));
                }
            }
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|((d, m), c)| {
                let mono = contact_label(d, m);
                if c.is_one() {
                    mono
                } else {
                    format!("{c}·{mono}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn grassmann_merge_sign(s: Mask, t: Mask) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let low = rest.trailing_zeros();
        inversions += (t & ((1 << low) - 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

pub fn contact_label(t_deg: i64, mask: Mask) -> String {
    match (t_deg, mask) {
        (0, 0) => "1".to_string(),
        (0, m) => mask_label(m),
        (d, 0) => format!("t^{d}"),
        (d, m) => format!("t^{d}·{}", mask_label(m)),
    }
}

/// The Poisson part `{f,g}_P = (-1)^{p(f)} Σ_j ∂_j f ∂_j g` on generating
/// functions.
pub fn poisson_part(f: &ContactFunction, g: &ContactFunction) -> ContactFunction {
    let n = f.generators();
    let mut out = ContactFunction::zero(n);
    let (even, odd) = f.parity_split();
    for (part, sign) in [(even, 1i64), (odd, -1i64)] {
        if part.is_zero() {
            continue;
        }
        for j in 1..=n {
            let dj_f = part.partial_theta(j);
            if dj_f.is_zero() {
                continue;
            }
            let prod = dj_f.mul(&g.partial_theta(j));
            out.add_scaled(&prod, &Scalar::from_int(sign));
        }
    }
    out
}

/// The contact bracket
/// `{f,g} = Δ(f)·∂_t g - ∂_t f·Δ(g) - {f,g}_P` with Δ(f) = 2f - Σθ_j∂_j f.
pub fn contact_bracket(f: &ContactFunction, g: &ContactFunction) -> ContactFunction {
    let mut out = f.delta_weight().mul(&g.partial_t());
    out.add_scaled(&f.partial_t().mul(&g.delta_weight()), &Scalar::from_int(-1));
    out.add_scaled(&poisson_part(f, g), &Scalar::from_int(-1));
    out
}

/// Residue pairing `Res(f·g)`: the coefficient of `t^{-1}·θ_1···θ_N`.
/// Under the documented change of coordinates the N = 6 top monomial in
/// the split generators equals θ_1···θ_6 exactly, so no Jacobian factor
/// appears here.
pub fn residue_form(f: &ContactFunction, g: &ContactFunction) -> Scalar {
    let n = f.generators();
    let full: Mask = ((1u64 << n) - 1) as Mask;
    f.mul(g).coeff(-1, full)
}

/// Basis layout of the truncated algebra: degree strata in ascending
/// order, each stratum ordered like po(0|N) monomials.
pub struct ContactBasis {
    pub n: usize,
    pub window: i64,
    masks: Vec<Mask>,
    rank_of_mask: BTreeMap<Mask, usize>,
}

impl ContactBasis {
    pub fn new(n: usize, window: i64) -> Self {
        assert!(window >= 1);
        let masks = crate::grassmann::po_basis_masks(n);
        let rank_of_mask = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ContactBasis {
            n,
            window,
            masks,
            rank_of_mask,
        }
    }

    pub fn dim(&self) -> usize {
        (2 * self.window as usize + 1) << self.n
    }

    pub fn stratum(&self) -> usize {
        1 << self.n
    }

    pub fn index(&self, t_deg: i64, mask: Mask) -> Option<usize> {
        if t_deg < -self.window || t_deg > self.window {
            return None;
        }
        let offset = (t_deg + self.window) as usize * self.stratum();
        Some(offset + self.rank_of_mask[&mask])
    }

    pub fn decode(&self, index: usize) -> (i64, Mask) {
        let stratum = self.stratum();
        let d = index / stratum;
        (d as i64 - self.window, self.masks[index % stratum])
    }

    /// In-window coordinates of a function, `None` if any term escapes.
    pub fn vector(&self, f: &ContactFunction) -> Option<Vector> {
        let mut v = Vector::zero();
        for ((d, m), c) in f.terms() {
            v.add_term(self.index(d, m)?, c);
        }
        Some(v)
    }

    pub fn function(&self, v: &Vector) -> ContactFunction {
        let mut f = ContactFunction::zero(self.n);
        for (i, c) in v.iter() {
            let (d, m) = self.decode(i);
            f.add_term(d, m, c);
        }
        f
    }
}

/// Builds the band-limited contact algebra on 1|N variables with window
/// [-M, M]; for N = 6 the residue form is attached.
pub fn build_k_truncated(
    n: usize,
    window: i64,
) -> Result<(LieSuperAlgebra, ContactBasis, Option<BilinearForm>), Error> {
    if n < 1 || n > 8 {
        return Err(Error::InvalidParameters("contact algebra needs 1 <= N <= 8".into()));
    }
    if window < 1 {
        return Err(Error::InvalidParameters("window must be at least 1".into()));
    }
    let basis = ContactBasis::new(n, window);
    let d = basis.dim();
    let labels: Vec<String> = (0..d)
        .map(|i| {
            let (t, m) = basis.decode(i);
            contact_label(t, m)
        })
        .collect();
    let parities: Vec<Parity> = (0..d)
        .map(|i| Parity::from_usize(basis.decode(i).1.count_ones() as usize))
        .collect();
    let space = SuperSpace::new(labels, parities)?;

    // Structure constants where the product stays in the window; escapes
    // elsewhere. Assembled per-row in parallel.
    let rows = par::map_indexed(d, |i| {
        let (di, mi) = basis.decode(i);
        let fi = ContactFunction::monomial(n, di, mi, Scalar::one());
        let mut in_window = Vec::new();
        let mut escapes = Vec::new();
        for j in 0..d {
            let (dj, mj) = basis.decode(j);
            let fj = ContactFunction::monomial(n, dj, mj, Scalar::one());
            let res = contact_bracket(&fi, &fj);
            match basis.vector(&res) {
                Some(v) if v.is_zero() => {}
                Some(v) => in_window.push(((i, j), v)),
                None => escapes.push((i, j)),
            }
        }
        (in_window, escapes)
    });
    let mut brackets = BTreeMap::new();
    let mut escaped = Vec::new();
    for (in_window, escapes) in rows {
        brackets.extend(in_window);
        escaped.extend(escapes);
    }
    let grading = Grading {
        degrees: (0..d).map(|i| basis.decode(i).0).collect(),
        window: (-window, window),
    };
    let algebra = LieSuperAlgebra::new_truncated(
        format!("k(1|{n})[{}]", window),
        space,
        brackets,
        escaped,
        grading,
    );

    let form = (n == 6).then(|| {
        let full: Mask = ((1u64 << n) - 1) as Mask;
        let mut gram = Mat::zeros(d, d);
        for i in 0..d {
            let (di, mi) = basis.decode(i);
            for j in 0..d {
                let (dj, mj) = basis.decode(j);
                if di + dj == -1 && (mi | mj) == full && (mi & mj) == 0 {
                    let sign = grassmann_merge_sign(mi, mj).expect("disjoint masks");
                    gram.set(i, j, Scalar::from_int(sign));
                }
            }
        }
        BilinearForm::new("residue", Parity::Even, gram)
    });
    Ok((algebra, basis, form))
}

/// Polynomial/principal split: a = span of t-degrees >= 0, a* = span of
/// t-degrees <= -1 (all θ parts), as spanning vectors.
pub fn polynomial_principal_spans(basis: &ContactBasis) -> (Vec<Vector>, Vec<Vector>) {
    let mut a = Vec::new();
    let mut a_star = Vec::new();
    for i in 0..basis.dim() {
        let (d, _) = basis.decode(i);
        if d >= 0 {
            a.push(Vector::unit(i));
        } else {
            a_star.push(Vector::unit(i));
        }
    }
    (a, a_star)
}

/// ζ-multiplication split of k(1|6): a = functions free of θ_6 (all
/// degrees), a* = a·ζ with ζ = θ_6 + Σ_{i<=5} k_i θ_i.
pub fn zeta_split_spans(
    basis: &ContactBasis,
    zeta: &ZetaVector,
) -> Result<(Vec<Vector>, Vec<Vector>), Error> {
    if basis.n != 6 || zeta.components().len() != 5 {
        return Err(Error::InvalidParameters(
            "the ζ split lives in k(1|6) with a 5-component k".into(),
        ));
    }
    let z = zeta.element();
    let theta6: Mask = 1 << 5;
    let mut a = Vec::new();
    let mut a_star = Vec::new();
    for i in 0..basis.dim() {
        let (d, m) = basis.decode(i);
        if m & theta6 != 0 {
            continue;
        }
        a.push(Vector::unit(i));
        let f = ContactFunction::monomial(basis.n, d, m, Scalar::one());
        let fz = f.mul_theta(&z);
        let v = basis
            .vector(&fz)
            .expect("ζ-multiplication preserves the t-degree");
        a_star.push(v);
    }
    Ok((a, a_star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form_properties;

    fn cf(n: usize, d: i64, mask: Mask) -> ContactFunction {
        ContactFunction::monomial(n, d, mask, Scalar::one())
    }

    #[test]
    fn bracket_basics() {
        let n = 2;
        let t = ContactFunction::t_power(n, 1);
        assert!(contact_bracket(&t, &t).is_zero());
        // {1, t} = 2: Δ(1) = 2, ∂_t t = 1, no Poisson part.
        let one = ContactFunction::one(n);
        assert_eq!(
            contact_bracket(&one, &t),
            ContactFunction::monomial(n, 0, 0, Scalar::from_int(2))
        );
        // {θi, θj} = +δij: only the Poisson part survives and flips sign.
        for i in 1..=n {
            for j in 1..=n {
                let b = contact_bracket(
                    &ContactFunction::theta(n, i),
                    &ContactFunction::theta(n, j),
                );
                let expect = if i == j {
                    ContactFunction::one(n)
                } else {
                    ContactFunction::zero(n)
                };
                assert_eq!(b, expect);
            }
        }
    }

    #[test]
    fn bracket_degree_window() {
        // bracket of t-degrees a, b lands in degrees {a+b-1, a+b}
        let n = 2;
        let f = cf(n, 2, 0b01);
        let g = cf(n, -1, 0b10);
        let res = contact_bracket(&f, &g);
        for ((d, _), _) in res.terms() {
            assert!(d == 1 || d == 0, "unexpected degree {d}");
        }
    }

    #[test]
    fn residue_examples() {
        let n = 6;
        let full: Mask = 0b111111;
        let f = cf(n, -1, full);
        let g = ContactFunction::one(n);
        assert_eq!(residue_form(&f, &g), Scalar::one());
        // both degrees >= 0 pair to zero
        assert_eq!(residue_form(&cf(n, 0, full), &g), Scalar::zero());
        // Res kills t-derivatives
        for (d, m) in [(3i64, 0b000111u32), (-2, full), (1, 0)] {
            let h = cf(n, d, m);
            let dh = h.partial_t();
            assert_eq!(
                residue_form(&dh, &ContactFunction::one(n)),
                Scalar::zero()
            );
        }
    }

    #[test]
    fn truncated_small_axioms() {
        // N = 2, M = 2: exhaustive in-window antisymmetry and Jacobi.
        let (g, basis, _) = build_k_truncated(2, 2).unwrap();
        assert_eq!(g.dim(), 5 * 4);
        assert_eq!(basis.dim(), 20);
        assert!(g.parity_violations().is_empty());
        let anti = g.check_super_antisymmetry();
        assert!(anti.passed());
        assert!(anti.skipped > 0, "boundary pairs must be skipped");
        let jac = g.check_super_jacobi();
        assert!(jac.passed());
        assert!(jac.checked > 0 && jac.skipped > 0);
    }

    #[test]
    fn residue_form_on_k16_window_conditional() {
        let (g, _, form) = build_k_truncated(6, 1).unwrap();
        let form = form.unwrap();
        let rep = form_properties(&g, &form);
        assert!(rep.supersymmetric.passed());
        assert!(rep.parity_consistent.passed());
        assert!(rep.invariant.passed());
        assert!(rep.invariant.skipped > 0);
        // Nondegenerate away from the boundary stratum t^M.
        assert!(rep.nondegenerate.pass);
        assert_eq!(rep.nondegenerate.boundary, 64);
        assert_eq!(rep.nondegenerate.rank, g.dim() - 64);
    }

    #[test]
    fn polynomial_principal_split_dimensions() {
        let (g, basis, _) = build_k_truncated(2, 2).unwrap();
        let (a, astar) = polynomial_principal_spans(&basis);
        assert_eq!(a.len(), 3 * 4);
        assert_eq!(astar.len(), 2 * 4);
        assert_eq!(a.len() + astar.len(), g.dim());
    }

    #[test]
    fn zeta_split_dimensions() {
        let (_, basis, _) = build_k_truncated(6, 1).unwrap();
        let zeta = ZetaVector::default_for(5);
        let (a, astar) = zeta_split_spans(&basis, &zeta).unwrap();
        assert_eq!(a.len(), 3 * 32);
        assert_eq!(astar.len(), 3 * 32);
    }

    #[test]
    fn escape_bookkeeping_is_exact() {
        // Every pair is either stored or escaped, and escaped pairs are
        // exactly those whose true bracket leaves the window.
        let (g, basis, _) = build_k_truncated(1, 1).unwrap();
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let (di, mi) = basis.decode(i);
                let (dj, mj) = basis.decode(j);
                let truth = contact_bracket(
                    &cf(1, di, mi),
                    &cf(1, dj, mj),
                );
                let escapes = basis.vector(&truth).is_none();
                assert_eq!(g.pair_escaped(i, j), escapes, "pair ({i},{j})");
            }
        }
    }
}
