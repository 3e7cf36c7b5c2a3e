//! Structure-constant Lie superalgebras, bilinear forms, and the axiom
//! checkers (super-antisymmetry, super-Jacobi, form properties).
//!
//! Truncated algebras (contact and loop realizations) carry a degree
//! grading and a window; bracket pairs whose true product leaves the
//! window are recorded as escaped, and every checker skips — and counts —
//! instances that would touch them. A pass on a truncated algebra is
//! therefore always window-conditional, never silent.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::linalg::Mat;
use crate::par::{scan, ScanTally, WITNESS_CAP};
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};

/// Integer grading of a band-limited algebra: one degree per basis
/// element plus the retained window. The residue-style forms pair degree
/// `d` with `-1-d`; basis elements whose partner degree falls outside the
/// window are "boundary" elements and are exempted (with bookkeeping)
/// from nondegeneracy claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub degrees: Vec<i64>,
    pub window: (i64, i64),
}

impl Grading {
    pub fn in_window(&self, d: i64) -> bool {
        d >= self.window.0 && d <= self.window.1
    }

    /// True when the form-dual of a degree-`d` element escapes the window.
    pub fn dual_escapes(&self, d: i64) -> bool {
        !self.in_window(-1 - d)
    }

    pub fn boundary_indices(&self) -> Vec<usize> {
        (0..self.degrees.len())
            .filter(|&i| self.dual_escapes(self.degrees[i]))
            .collect()
    }
}

/// A finite-dimensional (possibly band-limited) Lie superalgebra given by
/// structure constants on a labeled homogeneous basis.
#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    name: String,
    space: SuperSpace,
    /// Dense `d*d` table; entry `i*d+j` is `[e_i, e_j]`, empty = zero.
    brackets: Vec<Vector>,
    /// Pairs whose true bracket leaves the window; parallel to `brackets`.
    escaped: Vec<bool>,
    grading: Option<Grading>,
}

/// Witness of a failed pair check, by basis indices.
pub type PairWitness = (usize, usize);
/// Witness of a failed triple check, by basis indices.
pub type TripleWitness = (usize, usize, usize);

impl LieSuperAlgebra {
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        brackets: BTreeMap<(usize, usize), Vector>,
    ) -> Self {
        let d = space.dim();
        let mut table = vec![Vector::zero(); d * d];
        for ((i, j), v) in brackets {
            assert!(i < d && j < d, "bracket index out of range");
            assert!(v.fits(d), "bracket value out of range");
            table[i * d + j] = v;
        }
        LieSuperAlgebra {
            name: name.into(),
            space,
            brackets: table,
            escaped: vec![false; d * d],
            grading: None,
        }
    }

    /// Builder for band-limited algebras: `brackets` holds the pairs whose
    /// product stays inside the window, `escaped` the pairs that do not.
    pub fn new_truncated(
        name: impl Into<String>,
        space: SuperSpace,
        brackets: BTreeMap<(usize, usize), Vector>,
        escaped_pairs: impl IntoIterator<Item = (usize, usize)>,
        grading: Grading,
    ) -> Self {
        let d = space.dim();
        assert_eq!(grading.degrees.len(), d, "grading length mismatch");
        let mut alg = LieSuperAlgebra::new(name, space, brackets);
        for (i, j) in escaped_pairs {
            alg.escaped[i * d + j] = true;
        }
        alg.grading = Some(grading);
        alg
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn is_truncated(&self) -> bool {
        self.grading.is_some()
    }

    pub fn escaped_pair_count(&self) -> u64 {
        self.escaped.iter().filter(|&&e| e).count() as u64
    }

    /// `[e_i, e_j]` when it stays in the window.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Option<&Vector> {
        let d = self.dim();
        if self.escaped[i * d + j] {
            None
        } else {
            Some(&self.brackets[i * d + j])
        }
    }

    pub fn pair_escaped(&self, i: usize, j: usize) -> bool {
        self.escaped[i * self.dim() + j]
    }

    /// Bilinear extension of the structure constants. `None` when any
    /// contributing pair escaped the window.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Option<Vector> {
        debug_assert!(x.fits(self.dim()) && y.fits(self.dim()));
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let v = self.bracket_basis(i, j)?;
                if !v.is_zero() {
                    out.add_scaled(v, &(a * b));
                }
            }
        }
        Some(out)
    }

    /// Bracket on a finite (non-truncated) algebra, where escapes cannot
    /// happen.
    pub fn bracket_exact(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket(x, y).expect("bracket escaped the window on a finite algebra")
    }

    /// `[e_i, v]`, `None` on escape.
    fn bracket_left_basis(&self, i: usize, v: &Vector) -> Option<Vector> {
        let mut out = Vector::zero();
        for (m, c) in v.iter() {
            let w = self.bracket_basis(i, m)?;
            if !w.is_zero() {
                out.add_scaled(w, c);
            }
        }
        Some(out)
    }

    /// `[v, e_k]`, `None` on escape.
    fn bracket_right_basis(&self, v: &Vector, k: usize) -> Option<Vector> {
        let mut out = Vector::zero();
        for (m, c) in v.iter() {
            let w = self.bracket_basis(m, k)?;
            if !w.is_zero() {
                out.add_scaled(w, c);
            }
        }
        Some(out)
    }

    /// Replaces one structure constant, used by the fault-injection corpus.
    pub fn corrupt_constant(&mut self, i: usize, j: usize, k: usize, delta: &Scalar) {
        let d = self.dim();
        self.brackets[i * d + j].add_term(k, delta);
    }

    /// Structure constants as a sorted map, for export.
    pub fn bracket_entries(&self) -> BTreeMap<(usize, usize), &Vector> {
        let d = self.dim();
        let mut out = BTreeMap::new();
        for i in 0..d {
            for j in 0..d {
                let v = &self.brackets[i * d + j];
                if !v.is_zero() {
                    out.insert((i, j), v);
                }
            }
        }
        out
    }

    pub fn escaped_pairs(&self) -> Vec<(usize, usize)> {
        let d = self.dim();
        (0..d * d)
            .filter(|&n| self.escaped[n])
            .map(|n| (n / d, n % d))
            .collect()
    }

    /// Every stored bracket must live in the parity component
    /// `p(e_i) + p(e_j)`; returns the offending pairs.
    pub fn parity_violations(&self) -> Vec<PairWitness> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let expect = self.space.parity(i).plus(self.space.parity(j));
                let v = &self.brackets[i * d + j];
                if v.iter().any(|(k, _)| self.space.parity(k) != expect) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Verifies `[x,y] = -(-1)^{p(x)p(y)} [y,x]` on all basis pairs.
    pub fn check_super_antisymmetry(&self) -> ScanTally<PairWitness> {
        let d = self.dim();
        scan(d, |i| {
            let mut t = ScanTally::default();
            for j in i..d {
                let (Some(xy), Some(yx)) = (self.bracket_basis(i, j), self.bracket_basis(j, i))
                else {
                    t.skipped += 1;
                    continue;
                };
                t.checked += 1;
                let sign = self.space.parity(i).koszul_sign(self.space.parity(j));
                let mut defect = xy.clone();
                defect.add_scaled(yx, &Scalar::from_int(sign));
                if !defect.is_zero() && t.witnesses.len() < WITNESS_CAP {
                    t.witnesses.push((i, j));
                }
            }
            t
        })
    }

    /// Verifies `[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)}[y,[x,z]]` on basis
    /// triples with `i <= j <= k`; given antisymmetry, the Jacobiator is
    /// alternating, so sorted triples are exhaustive.
    pub fn check_super_jacobi(&self) -> ScanTally<TripleWitness> {
        let d = self.dim();
        scan(d, |i| {
            let mut t = ScanTally::default();
            let pi = self.space.parity(i);
            for j in i..d {
                let sign = Scalar::from_int(pi.koszul_sign(self.space.parity(j)));
                for k in j..d {
                    let instance = (|| {
                        let yz = self.bracket_basis(j, k)?;
                        let xy = self.bracket_basis(i, j)?;
                        let xz = self.bracket_basis(i, k)?;
                        let lhs = self.bracket_left_basis(i, yz)?;
                        let t1 = self.bracket_right_basis(xy, k)?;
                        let t2 = self.bracket_left_basis(j, xz)?;
                        let mut defect = lhs;
                        defect.add_scaled(&t1, &Scalar::from_int(-1));
                        defect.add_scaled(&t2, &-&sign);
                        Some(defect.is_zero())
                    })();
                    match instance {
                        None => t.skipped += 1,
                        Some(ok) => {
                            t.checked += 1;
                            if !ok && t.witnesses.len() < WITNESS_CAP {
                                t.witnesses.push((i, j, k));
                            }
                        }
                    }
                }
            }
            t
        })
    }

    /// Supertrace of `ad x ∘ ad y` on all basis pairs; requires a finite
    /// (window-free) algebra.
    pub fn killing_form(&self) -> Result<BilinearForm, Error> {
        let d = self.dim();
        if self.escaped.iter().any(|&e| e) {
            return Err(Error::InvalidParameters(
                "Killing form is not defined on a window-truncated algebra".into(),
            ));
        }
        // (ad_i ad_j)_{kk} = sum_m c(j,k -> m) c(i,m -> k), supertraced.
        let rows = crate::par::map_indexed(d, |i| {
            let mut row = vec![Scalar::zero(); d];
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for k in 0..d {
                    let v = &self.brackets[j * d + k];
                    for (m, c) in v.iter() {
                        if let Some(w) = self.brackets[i * d + m].get(k) {
                            let sgn = if self.space.parity(k).is_odd() { -1 } else { 1 };
                            acc += &(c * w).mul_int(sgn);
                        }
                    }
                }
                *slot = acc;
            }
            row
        });
        let gram = Mat::from_rows(rows);
        Ok(BilinearForm::new("killing", Parity::Even, gram))
    }
}

/// A bilinear form on the basis of some algebra, as a Gram matrix plus a
/// declared parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub name: String,
    pub parity: Parity,
    gram: Mat,
}

impl BilinearForm {
    pub fn new(name: impl Into<String>, parity: Parity, gram: Mat) -> Self {
        assert_eq!(gram.rows(), gram.cols(), "Gram matrix must be square");
        BilinearForm {
            name: name.into(),
            parity,
            gram,
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.gram.at(i, j)
    }

    /// `B(x, y)` by bilinear extension.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let g = self.gram.at(i, j);
                if !g.is_zero() {
                    acc += &(&(a * b) * g);
                }
            }
        }
        acc
    }

    pub fn scaled(&self, c: &Scalar) -> BilinearForm {
        let mut gram = self.gram.clone();
        for r in 0..gram.rows() {
            for col in 0..gram.cols() {
                let v = gram.at(r, col) * c;
                gram.set(r, col, v);
            }
        }
        BilinearForm::new(self.name.clone(), self.parity, gram)
    }

    /// Used by the fault-injection corpus.
    pub fn corrupt_entry(&mut self, i: usize, j: usize, delta: &Scalar) {
        let v = self.gram.at(i, j) + delta;
        self.gram.set(i, j, v);
    }
}

/// Rank data for the (window-aware) nondegeneracy verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub dim: usize,
    /// Boundary elements whose form-duals escape the window.
    pub boundary: usize,
    /// True when a boundary element unexpectedly pairs with something.
    pub boundary_row_nonzero: bool,
    pub pass: bool,
}

/// Report of `form_properties`: each field is an independent check.
#[derive(Clone, Debug)]
pub struct FormReport {
    pub supersymmetric: ScanTally<PairWitness>,
    pub parity_consistent: ScanTally<PairWitness>,
    pub invariant: ScanTally<TripleWitness>,
    pub nondegenerate: RankReport,
}

impl FormReport {
    pub fn all_pass(&self) -> bool {
        self.supersymmetric.passed()
            && self.parity_consistent.passed()
            && self.invariant.passed()
            && self.nondegenerate.pass
    }
}

/// Checks supersymmetry, parity consistency, invariance and (window-aware)
/// nondegeneracy of `form` on `g`.
pub fn form_properties(g: &LieSuperAlgebra, form: &BilinearForm) -> FormReport {
    assert_eq!(g.dim(), form.dim(), "form does not match the algebra");
    let d = g.dim();

    let supersymmetric = scan(d, |i| {
        let mut t = ScanTally::default();
        for j in i..d {
            t.checked += 1;
            let sign = g.space().parity(i).koszul_sign(g.space().parity(j));
            let expect = form.entry(j, i).mul_int(sign);
            if *form.entry(i, j) != expect && t.witnesses.len() < WITNESS_CAP {
                t.witnesses.push((i, j));
            }
        }
        t
    });

    let parity_consistent = scan(d, |i| {
        let mut t = ScanTally::default();
        for j in 0..d {
            t.checked += 1;
            let pair = g.space().parity(i).plus(g.space().parity(j));
            if pair != form.parity && !form.entry(i, j).is_zero() && t.witnesses.len() < WITNESS_CAP
            {
                t.witnesses.push((i, j));
            }
        }
        t
    });

    let invariant = scan(d, |i| {
        let mut t = ScanTally::default();
        for j in 0..d {
            let left = g.bracket_basis(i, j);
            for k in 0..d {
                let right = g.bracket_basis(j, k);
                let (Some(left), Some(right)) = (left, right) else {
                    t.skipped += 1;
                    continue;
                };
                t.checked += 1;
                let mut lhs = Scalar::zero();
                for (m, c) in left.iter() {
                    let gmk = form.entry(m, k);
                    if !gmk.is_zero() {
                        lhs += &(c * gmk);
                    }
                }
                let mut rhs = Scalar::zero();
                for (m, c) in right.iter() {
                    let gim = form.entry(i, m);
                    if !gim.is_zero() {
                        rhs += &(c * gim);
                    }
                }
                if lhs != rhs && t.witnesses.len() < WITNESS_CAP {
                    t.witnesses.push((i, j, k));
                }
            }
        }
        t
    });

    let nondegenerate = rank_report(g, form);

    FormReport {
        supersymmetric,
        parity_consistent,
        invariant,
        nondegenerate,
    }
}

fn rank_report(g: &LieSuperAlgebra, form: &BilinearForm) -> RankReport {
    let d = g.dim();
    let boundary: Vec<usize> = match g.grading() {
        Some(gr) => gr.boundary_indices(),
        None => Vec::new(),
    };
    let boundary_set: std::collections::BTreeSet<usize> = boundary.iter().copied().collect();
    let mut boundary_row_nonzero = false;
    for &b in &boundary {
        for j in 0..d {
            if !form.entry(b, j).is_zero() || !form.entry(j, b).is_zero() {
                boundary_row_nonzero = true;
            }
        }
    }
    // Rank over the non-boundary block.
    let keep: Vec<usize> = (0..d).filter(|i| !boundary_set.contains(i)).collect();
    let mut block = Mat::zeros(keep.len(), keep.len());
    for (r, &i) in keep.iter().enumerate() {
        for (c, &j) in keep.iter().enumerate() {
            block.set(r, c, form.entry(i, j).clone());
        }
    }
    let rank = block.rank();
    let pass = rank == keep.len() && !boundary_row_nonzero;
    RankReport {
        rank,
        dim: d,
        boundary: boundary.len(),
        boundary_row_nonzero,
        pass,
    }
}

/// Gram radical `{x : B(x, ·) = 0}` as a list of kernel basis vectors.
pub fn form_radical(form: &BilinearForm) -> Vec<Vector> {
    form.gram().transpose().kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sl(2) with basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
    pub(crate) fn sl2() -> LieSuperAlgebra {
        let space = SuperSpace::new(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
        )
        .unwrap();
        let mut b = BTreeMap::new();
        let h = 0;
        let e = 1;
        let f = 2;
        let two = |i| Vector::from_terms([(i, Scalar::from_int(2))]);
        b.insert((h, e), two(e));
        b.insert((e, h), two(e).negated());
        b.insert((h, f), two(f).negated());
        b.insert((f, h), two(f));
        b.insert((e, f), Vector::unit(h));
        b.insert((f, e), Vector::unit(h).negated());
        LieSuperAlgebra::new("sl(2)", space, b)
    }

    #[test]
    fn sl2_axioms() {
        let g = sl2();
        assert!(g.parity_violations().is_empty());
        assert!(g.check_super_antisymmetry().passed());
        let jac = g.check_super_jacobi();
        assert!(jac.passed());
        assert_eq!(jac.checked, 10); // C(3+2,3) sorted triples with repeats
    }

    #[test]
    fn abelian_passes_everything() {
        let space = SuperSpace::new(vec!["a".into(), "b".into()], vec![Parity::Even; 2]).unwrap();
        let g = LieSuperAlgebra::new("ab", space, BTreeMap::new());
        assert!(g.check_super_antisymmetry().passed());
        assert!(g.check_super_jacobi().passed());
        let k = g.killing_form().unwrap();
        assert!(k.gram().rank() == 0);
    }

    #[test]
    fn corrupted_constant_is_detected() {
        let mut g = sl2();
        g.corrupt_constant(0, 1, 1, &Scalar::one()); // [h,e] += e
        let t = g.check_super_antisymmetry();
        assert!(!t.passed());
        assert_eq!(t.witnesses[0], (0, 1));
    }

    #[test]
    fn sl2_killing_is_trace_form_multiple() {
        let g = sl2();
        let k = g.killing_form().unwrap();
        // Killing(h,h) = 8, Killing(e,f) = 4 for sl(2).
        assert_eq!(*k.entry(0, 0), Scalar::from_int(8));
        assert_eq!(*k.entry(1, 2), Scalar::from_int(4));
        assert_eq!(*k.entry(1, 1), Scalar::zero());
        let rep = form_properties(&g, &k);
        assert!(rep.all_pass());
    }

    #[test]
    fn degenerate_form_reported() {
        let g = sl2();
        let gram = Mat::zeros(3, 3);
        let b = BilinearForm::new("zero", Parity::Even, gram);
        let rep = form_properties(&g, &b);
        assert!(!rep.nondegenerate.pass);
        assert_eq!(rep.nondegenerate.rank, 0);
        assert!(rep.invariant.passed()); // zero form is invariant
    }
}
