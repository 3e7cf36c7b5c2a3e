//! Grassmann calculus on anticommuting generators θ1..θN — product, left
//! derivatives, top-coefficient (Berezin) integral — the odd Poisson
//! bracket it carries, the Poisson superalgebra po(0|N) with its integral
//! form, the h/sh/psh tower, and the ζ-multiplication duals.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lie::{BilinearForm, LieSuperAlgebra};
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};
use crate::structure::{self, Projection, SubalgebraHandle};

/// Index subsets of {1..N} as bitmasks; bit `i-1` flags θ_i.
pub type Mask = u32;

/// An element of the Grassmann algebra on `n` generators: a sparse map
/// from monomial masks to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannElement {
    n: usize,
    coeffs: BTreeMap<Mask, Scalar>,
}

/// Sign of merging the sorted index sets `s` and `t` into sorted order;
/// `None` when they overlap (θ_i² = 0).
fn merge_sign(s: Mask, t: Mask) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    // Count transpositions: for each generator in s, the members of t
    // strictly below it must move past it.
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let low = rest.trailing_zeros();
        inversions += (t & ((1 << low) - 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Sign picked up by pulling θ_i (1-based) to the front of its monomial.
fn pull_front_sign(mask: Mask, i: usize) -> i64 {
    let below = (mask & ((1 << (i - 1)) - 1)).count_ones();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Self {
        GrassmannElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        e.add_term(0, &c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    /// θ_i, 1-based.
    pub fn theta(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "generator index out of range");
        let mut e = Self::zero(n);
        e.add_term(1 << (i - 1), &Scalar::one());
        e
    }

    pub fn monomial(n: usize, mask: Mask, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        e.add_term(mask, &c);
        e
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Scalar)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> Scalar {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mask: Mask, c: &Scalar) {
        debug_assert!(mask < (1 << self.n));
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&mask) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&mask);
                }
            }
            None => {
                self.coeffs.insert(mask, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &GrassmannElement, c: &Scalar) {
        assert_eq!(self.n, other.n);
        for (m, v) in other.terms() {
            self.add_term(m, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Parity if homogeneous, `None` for zero or mixed.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut p = None;
        for (m, _) in self.terms() {
            let q = Parity::from_usize(m.count_ones() as usize);
            match p {
                None => p = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        p
    }

    pub fn parity_split(&self) -> (GrassmannElement, GrassmannElement) {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for (m, c) in self.terms() {
            if m.count_ones() % 2 == 0 {
                even.add_term(m, c);
            } else {
                odd.add_term(m, c);
            }
        }
        (even, odd)
    }

    /// Associative product with θ_i θ_j = -θ_j θ_i.
    pub fn wedge(&self, other: &GrassmannElement) -> GrassmannElement {
        assert_eq!(self.n, other.n, "mismatched generator counts");
        let mut out = Self::zero(self.n);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if let Some(sign) = merge_sign(s, t) {
                    out.add_term(s | t, &(a * b).mul_int(sign));
                }
            }
        }
        out
    }

    /// Left derivative ∂_i: pull θ_i to the front, collect the sign,
    /// delete it; kills monomials without θ_i.
    pub fn partial(&self, i: usize) -> GrassmannElement {
        assert!((1..=self.n).contains(&i));
        let bit = 1 << (i - 1);
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            if m & bit != 0 {
                out.add_term(m & !bit, &c.mul_int(pull_front_sign(m, i)));
            }
        }
        out
    }

    /// Coefficient of the top monomial θ_1···θ_N (the integral against
    /// the volume normalized to ascending index order).
    pub fn berezin(&self) -> Scalar {
        self.coeff(((1u64 << self.n) - 1) as Mask)
    }

    /// Euler operator Σ θ_j ∂_j: multiplies each monomial by its degree.
    pub fn euler(&self) -> GrassmannElement {
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            out.add_term(m, &c.mul_int(m.count_ones() as i64));
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mono = mask_label(m);
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

pub fn mask_label(mask: Mask) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            s.push_str(&format!("θ{}", i + 1));
        }
    }
    s
}

/// The odd Poisson bracket `{f,g} = (-1)^{p(f)} Σ_j ∂_j f · ∂_j g`,
/// extended to inhomogeneous `f` by linearity in the parity parts.
pub fn poisson_bracket(f: &GrassmannElement, g: &GrassmannElement) -> GrassmannElement {
    let n = f.generators();
    assert_eq!(n, g.generators());
    let mut out = GrassmannElement::zero(n);
    for (part, sign) in [(f.parity_split().0, 1i64), (f.parity_split().1, -1i64)] {
        if part.is_zero() {
            continue;
        }
        for j in 1..=n {
            let dj_f = part.partial(j);
            if dj_f.is_zero() {
                continue;
            }
            let prod = dj_f.wedge(&g.partial(j));
            out.add_scaled(&prod, &Scalar::from_int(sign));
        }
    }
    out
}

/// Poisson bracket for a general symmetric pairing `P` of the
/// generators: `{f,g} = (-1)^{p(f)} Σ_{a,b} P(a,b) ∂_a f · ∂_b g`. The
/// standard bracket is the identity pairing.
pub fn poisson_bracket_with_pairing(
    pairing: &Mat,
    f: &GrassmannElement,
    g: &GrassmannElement,
) -> GrassmannElement {
    let n = f.generators();
    assert_eq!(n, g.generators());
    assert_eq!(pairing.rows(), n);
    let mut out = GrassmannElement::zero(n);
    for (part, sign) in [(f.parity_split().0, 1i64), (f.parity_split().1, -1i64)] {
        if part.is_zero() {
            continue;
        }
        for a in 1..=n {
            let da_f = part.partial(a);
            if da_f.is_zero() {
                continue;
            }
            for b in 1..=n {
                let p = pairing.at(a - 1, b - 1);
                if p.is_zero() {
                    continue;
                }
                let prod = da_f.wedge(&g.partial(b));
                out.add_scaled(&prod, &(p.mul_int(sign)));
            }
        }
    }
    out
}

/// Basis order of po(0|N): monomials sorted by (degree, mask).
pub fn po_basis_masks(n: usize) -> Vec<Mask> {
    let mut masks: Vec<Mask> = (0..(1u64 << n) as Mask).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// po(0|N): all 2^N monomials under the odd Poisson bracket, with the
/// integral form B(f,g) = berezin(f·g) of parity N mod 2.
pub fn build_po(n: usize) -> (LieSuperAlgebra, BilinearForm) {
    assert!((1..=16).contains(&n));
    let masks = po_basis_masks(n);
    let index_of: BTreeMap<Mask, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let labels: Vec<String> = masks.iter().map(|&m| mask_label(m)).collect();
    let parities: Vec<Parity> = masks
        .iter()
        .map(|&m| Parity::from_usize(m.count_ones() as usize))
        .collect();
    let space = SuperSpace::new(labels, parities).expect("distinct monomials");

    let d = masks.len();
    let mut brackets = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            let f = GrassmannElement::monomial(n, masks[i], Scalar::one());
            let g = GrassmannElement::monomial(n, masks[j], Scalar::one());
            let res = poisson_bracket(&f, &g);
            if !res.is_zero() {
                let v = Vector::from_terms(res.terms().map(|(m, c)| (index_of[&m], c.clone())));
                brackets.insert((i, j), v);
            }
        }
    }
    let algebra = LieSuperAlgebra::new(format!("po(0|{n})"), space, brackets);

    let mut gram = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let prod = GrassmannElement::monomial(n, masks[i], Scalar::one())
                .wedge(&GrassmannElement::monomial(n, masks[j], Scalar::one()));
            gram.set(i, j, prod.berezin());
        }
    }
    let form = BilinearForm::new("berezin", Parity::from_usize(n), gram);
    (algebra, form)
}

/// Expresses a Grassmann element in po(0|N) coordinates.
pub fn to_po_vector(po: &LieSuperAlgebra, f: &GrassmannElement) -> Vector {
    let masks = po_basis_masks(f.generators());
    debug_assert_eq!(po.dim(), masks.len());
    let index_of: BTreeMap<Mask, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    Vector::from_terms(f.terms().map(|(m, c)| (index_of[&m], c.clone())))
}

/// The quotient tower po(0|N) → h = po/⟨1⟩ ⊃ sh = [h,h] → psh = sh/center,
/// with the forms that survive at each stage.
pub struct ShTower {
    pub n: usize,
    pub po: LieSuperAlgebra,
    pub po_form: BilinearForm,
    pub h: LieSuperAlgebra,
    pub h_proj: Projection,
    /// sh as a verified handle inside h.
    pub sh: SubalgebraHandle,
    pub sh_form: BilinearForm,
    pub psh: LieSuperAlgebra,
    pub psh_form: BilinearForm,
    /// Present when sh had a nonzero center to quotient away.
    pub psh_proj: Option<Projection>,
}

impl ShTower {
    /// Image of a po-element under the conditional realization of psh:
    /// project away constants, drop the top coefficient (brackets never
    /// produce it), land in sh coordinates, then through the psh quotient
    /// if one was needed.
    pub fn po_to_psh(&self, v: &Vector) -> Option<Vector> {
        let mut h_vec = self.h_proj.project(v);
        // The top monomial is the last complement coordinate (basis is
        // sorted by degree); strip it.
        let top = self.h.dim() - 1;
        if let Some(c) = h_vec.get(top) {
            let c = -c;
            h_vec.add_term(top, &c);
        }
        let sh_coords = self.sh.subspace().coordinates(&h_vec)?;
        Some(match &self.psh_proj {
            Some(p) => p.project(&sh_coords),
            None => sh_coords,
        })
    }
}

pub fn build_sh_tower(n: usize) -> Result<ShTower, Error> {
    if n < 3 {
        return Err(Error::InvalidParameters("the tower needs N >= 3".into()));
    }
    let (po, po_form) = build_po(n);
    let z = structure::center(&po)?;
    assert_eq!(z.dim(), 1, "center of po(0|N) is the constants");
    let (h, h_proj) = structure::quotient(&po, &z, format!("h(0|{n})"))?;
    let sh = structure::derived_subalgebra(&h, &format!("sh(0|{n})"))?;

    // Berezin pairing on the chosen h-representatives; honest (invariant,
    // well-defined) only after restriction to sh.
    let masks = po_basis_masks(n);
    let reps: Vec<Mask> = h_proj.complement().iter().map(|&i| masks[i]).collect();
    let mut h_gram = Mat::zeros(reps.len(), reps.len());
    for (a, &ma) in reps.iter().enumerate() {
        for (b, &mb) in reps.iter().enumerate() {
            let prod = GrassmannElement::monomial(n, ma, Scalar::one())
                .wedge(&GrassmannElement::monomial(n, mb, Scalar::one()));
            h_gram.set(a, b, prod.berezin());
        }
    }
    let h_pairing = BilinearForm::new("berezin", Parity::from_usize(n), h_gram);
    let sh_form = sh.restrict_form(&h_pairing, "berezin");

    let sh_alg = sh.algebra().clone();
    let z_sh = structure::center(&sh_alg)?;
    if z_sh.dim() == 0 {
        let mut psh = sh_alg;
        psh.set_name(format!("psh(0|{n})"));
        Ok(ShTower {
            n,
            po,
            po_form,
            h,
            h_proj,
            sh,
            sh_form: sh_form.clone(),
            psh,
            psh_form: sh_form,
            psh_proj: None,
        })
    } else {
        let (psh, psh_proj) = structure::quotient(&sh_alg, &z_sh, format!("psh(0|{n})"))?;
        let psh_form = structure::push_form_down(&sh_alg, &sh_form, &psh_proj, "berezin")?;
        Ok(ShTower {
            n,
            po,
            po_form,
            h,
            h_proj,
            sh,
            sh_form,
            psh,
            psh_form,
            psh_proj: Some(psh_proj),
        })
    }
}

/// The odd linear form ζ = θ_N + Σ_{i<N} k_i θ_i with Σ k_i² = -1,
/// enforced at construction.
#[derive(Clone, Debug)]
pub struct ZetaVector {
    k: Vec<Scalar>,
}

impl ZetaVector {
    pub fn new(k: Vec<Scalar>) -> Result<Self, Error> {
        let mut sum = Scalar::zero();
        for c in &k {
            sum += &(c * c);
        }
        if sum != Scalar::from_int(-1) {
            return Err(Error::ZetaInvariant {
                got: sum.to_string(),
            });
        }
        Ok(ZetaVector { k })
    }

    /// The default (i, 0, ..., 0).
    pub fn default_for(len: usize) -> Self {
        assert!(len >= 1);
        let mut k = vec![Scalar::zero(); len];
        k[0] = Scalar::i();
        ZetaVector { k }
    }

    pub fn components(&self) -> &[Scalar] {
        &self.k
    }

    /// ζ as a Grassmann element on `n = len+1` generators.
    pub fn element(&self) -> GrassmannElement {
        let n = self.k.len() + 1;
        let mut z = GrassmannElement::theta(n, n);
        for (i, c) in self.k.iter().enumerate() {
            z.add_scaled(&GrassmannElement::theta(n, i + 1), c);
        }
        z
    }
}

/// The ζ-multiplication dual pair inside po(0|2n): the subalgebra of
/// monomials in θ1..θ_{2n-1} and its product with ζ. Returns the two
/// spanning sets in po coordinates.
pub fn zeta_dual_spans(
    po: &LieSuperAlgebra,
    two_n: usize,
    zeta: &ZetaVector,
) -> (Vec<Vector>, Vec<Vector>) {
    assert_eq!(zeta.components().len(), two_n - 1);
    let z = zeta.element();
    let mut a_span = Vec::new();
    let mut a_star_span = Vec::new();
    let sub_mask_limit: Mask = 1 << (two_n - 1);
    for mask in 0..sub_mask_limit {
        let f = GrassmannElement::monomial(two_n, mask, Scalar::one());
        a_span.push(to_po_vector(po, &f));
        a_star_span.push(to_po_vector(po, &f.wedge(&z)));
    }
    (a_span, a_star_span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form_properties;

    fn th(n: usize, i: usize) -> GrassmannElement {
        GrassmannElement::theta(n, i)
    }

    #[test]
    fn wedge_anticommutes() {
        let n = 3;
        let a = th(n, 2).wedge(&th(n, 1));
        let mut expect = GrassmannElement::zero(n);
        expect.add_term(0b11, &Scalar::from_int(-1));
        assert_eq!(a, expect);
        assert!(th(n, 1).wedge(&th(n, 1)).is_zero());
    }

    #[test]
    fn wedge_expansion() {
        // (1 + θ1)(1 + θ2) = 1 + θ1 + θ2 + θ1θ2
        let n = 2;
        let mut a = GrassmannElement::one(n);
        a.add_scaled(&th(n, 1), &Scalar::one());
        let mut b = GrassmannElement::one(n);
        b.add_scaled(&th(n, 2), &Scalar::one());
        let prod = a.wedge(&b);
        for mask in 0..4u32 {
            assert_eq!(prod.coeff(mask), Scalar::one());
        }
    }

    #[test]
    fn left_derivative_signs() {
        let n = 2;
        let m = th(n, 1).wedge(&th(n, 2)); // θ1θ2
        assert_eq!(m.partial(1), th(n, 2));
        assert_eq!(m.partial(2), th(n, 1).scaled(&Scalar::from_int(-1)));
        assert!(th(n, 2).partial(1).is_zero());
    }

    #[test]
    fn berezin_basics() {
        let n = 3;
        let top = th(n, 1).wedge(&th(n, 2)).wedge(&th(n, 3));
        assert_eq!(top.berezin(), Scalar::one());
        assert_eq!(GrassmannElement::one(n).berezin(), Scalar::zero());
        // berezin ∘ partial = 0 on every monomial
        for mask in 0..(1 << n) as Mask {
            let f = GrassmannElement::monomial(n, mask, Scalar::one());
            for i in 1..=n {
                assert_eq!(f.partial(i).berezin(), Scalar::zero());
            }
        }
    }

    #[test]
    fn poisson_on_generators() {
        let n = 3;
        for i in 1..=n {
            for j in 1..=n {
                let b = poisson_bracket(&th(n, i), &th(n, j));
                let expect = if i == j {
                    GrassmannElement::constant(n, Scalar::from_int(-1))
                } else {
                    GrassmannElement::zero(n)
                };
                assert_eq!(b, expect, "{{θ{i},θ{j}}}");
            }
        }
        // {1, f} = 0
        for mask in 0..(1 << n) as Mask {
            let f = GrassmannElement::monomial(n, mask, Scalar::one());
            assert!(poisson_bracket(&GrassmannElement::one(n), &f).is_zero());
        }
        // {θ1, θ1θ2} = -θ2 under the fixed convention
        let b = poisson_bracket(&th(n, 1), &th(n, 1).wedge(&th(n, 2)));
        assert_eq!(b, th(n, 2).scaled(&Scalar::from_int(-1)));
        // and the antisymmetry partner {θ1θ2, θ1} = +θ2
        let b2 = poisson_bracket(&th(n, 1).wedge(&th(n, 2)), &th(n, 1));
        assert_eq!(b2, th(n, 2));
    }

    #[test]
    fn super_leibniz_randomized() {
        // {f, gh} = {f,g}h + (-1)^{p(f)p(g)} g{f,h} on monomials, N = 4.
        let n = 4;
        let masks = po_basis_masks(n);
        for &f in &masks {
            for &g in &masks {
                for &h in [0b0011u32, 0b0110, 0b1111, 0b0001].iter() {
                    let fe = GrassmannElement::monomial(n, f, Scalar::one());
                    let ge = GrassmannElement::monomial(n, g, Scalar::one());
                    let he = GrassmannElement::monomial(n, h, Scalar::one());
                    let lhs = poisson_bracket(&fe, &ge.wedge(&he));
                    let mut rhs = poisson_bracket(&fe, &ge).wedge(&he);
                    let sign = (f.count_ones() & g.count_ones() & 1) == 1;
                    let koszul = if sign { -1 } else { 1 };
                    rhs.add_scaled(
                        &ge.wedge(&poisson_bracket(&fe, &he)),
                        &Scalar::from_int(koszul),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn po_dimensions_and_axioms() {
        for n in 1..=4 {
            let (po, form) = build_po(n);
            assert_eq!(po.dim(), 1 << n);
            assert!(po.parity_violations().is_empty());
            assert!(po.check_super_antisymmetry().passed(), "po(0|{n}) antisym");
            assert!(po.check_super_jacobi().passed(), "po(0|{n}) jacobi");
            let rep = form_properties(&po, &form);
            assert!(rep.all_pass(), "po(0|{n}) form: {rep:?}");
            assert_eq!(form.parity, Parity::from_usize(n));
        }
    }

    #[test]
    fn po_center_is_constants() {
        let (po, _) = build_po(3);
        let z = structure::center(&po).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&Vector::unit(0))); // index 0 = the constant
    }

    #[test]
    fn sh_tower_dimensions() {
        let t = build_sh_tower(4).unwrap();
        assert_eq!(t.h.dim(), 15);
        assert_eq!(t.sh.dim(), 14);
        assert_eq!(t.psh.dim(), 14); // sh(0|4) is centerless
        let rep = form_properties(&t.psh, &t.psh_form);
        assert!(rep.all_pass(), "induced form on sh(0|4): {rep:?}");

        let t3 = build_sh_tower(3).unwrap();
        assert_eq!(t3.h.dim(), 7);
        assert_eq!(t3.sh.dim(), 6);
    }

    #[test]
    fn po2_bracket_example() {
        // {θ1, θ1θ2} = -θ2 inside the structure constants of po(0|2).
        let (po, _) = build_po(2);
        let i_th1 = po.space().index_of("θ1").unwrap();
        let i_th12 = po.space().index_of("θ1θ2").unwrap();
        let i_th2 = po.space().index_of("θ2").unwrap();
        let v = po.bracket_exact(&Vector::unit(i_th1), &Vector::unit(i_th12));
        assert_eq!(
            v,
            Vector::from_terms([(i_th2, Scalar::from_int(-1))])
        );
    }

    #[test]
    fn zeta_invariant_enforced() {
        assert!(ZetaVector::new(vec![Scalar::one(), Scalar::zero(), Scalar::zero()]).is_err());
        let z = ZetaVector::new(vec![Scalar::i(), Scalar::zero(), Scalar::zero()]).unwrap();
        // {ζ,ζ} = -(1 + Σk²) = 0
        let zeta = z.element();
        assert!(poisson_bracket(&zeta, &zeta).is_zero());
        // a control vector with Σk² ≠ -1 self-brackets to a constant
        let bad = {
            let n = 4;
            let mut v = GrassmannElement::theta(n, n);
            v.add_scaled(&GrassmannElement::theta(n, 1), &Scalar::one());
            v
        };
        assert!(!poisson_bracket(&bad, &bad).is_zero());
    }

    #[test]
    fn zeta_dual_spans_po4() {
        let (po, _) = build_po(4);
        let zeta = ZetaVector::default_for(3);
        let (a, astar) = zeta_dual_spans(&po, 4, &zeta);
        let a_span = Subspace::span(&a, po.dim()).unwrap();
        let astar_span = Subspace::span(&astar, po.dim()).unwrap();
        assert_eq!(a_span.dim(), 8);
        assert_eq!(astar_span.dim(), 8);
        assert!(crate::linalg::direct_sum_check(&a_span, &astar_span, 16).holds());
    }

    #[test]
    fn po_to_psh_mapping() {
        let t = build_sh_tower(4).unwrap();
        // θ1 maps to a nonzero psh element; the constant maps to zero.
        let th1 = to_po_vector(&t.po, &th(4, 1));
        assert!(t.po_to_psh(&th1).is_some_and(|v| !v.is_zero()));
        let one = to_po_vector(&t.po, &GrassmannElement::one(4));
        assert!(t.po_to_psh(&one).is_some_and(|v| v.is_zero()));
        // the top monomial is conditionally dropped
        let top = to_po_vector(
            &t.po,
            &GrassmannElement::monomial(4, 0b1111, Scalar::one()),
        );
        assert!(t.po_to_psh(&top).is_some_and(|v| v.is_zero()));
    }
}
