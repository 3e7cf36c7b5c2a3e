//! Loop extension g ⊗ C[x, x⁻¹], band-limited to x-degrees in [-M, M],
//! with the residue form pairing degree p against -1-p, and the lift of
//! certified triples degreewise.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lie::{BilinearForm, Grading, LieSuperAlgebra};
use crate::linalg::Mat;
use crate::manin::ManinTriple;
use crate::space::{Parity, SuperSpace, Vector};
use crate::structure;

/// Index layout of the loop algebra: contiguous degree strata, each a
/// copy of the base basis.
pub struct LoopBasis {
    pub base_dim: usize,
    pub window: i64,
}

impl LoopBasis {
    pub fn dim(&self) -> usize {
        (2 * self.window as usize + 1) * self.base_dim
    }

    pub fn index(&self, degree: i64, base: usize) -> Option<usize> {
        if degree < -self.window || degree > self.window {
            return None;
        }
        Some((degree + self.window) as usize * self.base_dim + base)
    }

    pub fn decode(&self, index: usize) -> (i64, usize) {
        (
            (index / self.base_dim) as i64 - self.window,
            index % self.base_dim,
        )
    }

    /// v ⊗ x^degree in loop coordinates.
    pub fn embed(&self, v: &Vector, degree: i64) -> Vector {
        Vector::from_terms(v.iter().map(|(i, c)| {
            (
                self.index(degree, i).expect("degree inside the window"),
                c.clone(),
            )
        }))
    }
}

/// Builds the band-limited loop algebra and the residue form
/// `Res_x B(f(x), g(x))`, which pairs x^p with x^{-1-p}.
pub fn loopify(
    g: &LieSuperAlgebra,
    form: &BilinearForm,
    window: i64,
) -> Result<(LieSuperAlgebra, BilinearForm, LoopBasis), Error> {
    if g.is_truncated() {
        return Err(Error::InvalidParameters(
            "only finite-dimensional algebras are lifted".into(),
        ));
    }
    if form.parity != Parity::Even {
        return Err(Error::InvalidParameters(
            "the loop residue form needs an even base form".into(),
        ));
    }
    if window < 1 {
        return Err(Error::InvalidParameters("window must be at least 1".into()));
    }
    let basis = LoopBasis {
        base_dim: g.dim(),
        window,
    };
    let d = basis.dim();
    let mut labels = Vec::with_capacity(d);
    let mut parities = Vec::with_capacity(d);
    for idx in 0..d {
        let (deg, i) = basis.decode(idx);
        labels.push(if deg == 0 {
            g.space().label(i).to_string()
        } else {
            format!("x^{deg}·{}", g.space().label(i))
        });
        parities.push(g.space().parity(i));
    }
    let space = SuperSpace::new(labels, parities)?;

    let mut brackets = BTreeMap::new();
    let mut escaped = Vec::new();
    for a in 0..d {
        let (p, i) = basis.decode(a);
        for b in 0..d {
            let (q, j) = basis.decode(b);
            let base = g.bracket_basis(i, j).expect("finite base algebra");
            if base.is_zero() {
                continue;
            }
            match basis.index(p + q, 0) {
                None => escaped.push((a, b)),
                Some(_) => {
                    let v = Vector::from_terms(base.iter().map(|(k, c)| {
                        (basis.index(p + q, k).expect("in window"), c.clone())
                    }));
                    brackets.insert((a, b), v);
                }
            }
        }
    }
    let grading = Grading {
        degrees: (0..d).map(|idx| basis.decode(idx).0).collect(),
        window: (-window, window),
    };
    let algebra = LieSuperAlgebra::new_truncated(
        format!("{}^(1)[{}]", g.name(), window),
        space,
        brackets,
        escaped,
        grading,
    );

    let mut gram = Mat::zeros(d, d);
    for a in 0..d {
        let (p, i) = basis.decode(a);
        for b in 0..d {
            let (q, j) = basis.decode(b);
            if p + q == -1 {
                gram.set(a, b, form.entry(i, j).clone());
            }
        }
    }
    let loop_form = BilinearForm::new(format!("res-{}", form.name), Parity::Even, gram);
    Ok((algebra, loop_form, basis))
}

/// Lifts a certified triple degreewise: A = a ⊗ C[x,x⁻¹] in the window,
/// likewise for the dual half.
pub fn lift_triple(t: &ManinTriple, window: i64) -> Result<ManinTriple, Error> {
    let (ambient, form, basis) = loopify(&t.g, &t.form, window)?;
    let mut a_span = Vec::new();
    let mut astar_span = Vec::new();
    for deg in -window..=window {
        for v in t.a.basis() {
            a_span.push(basis.embed(v, deg));
        }
        for v in t.a_star.basis() {
            astar_span.push(basis.embed(v, deg));
        }
    }
    let a = structure::subalgebra_from_span(
        &ambient,
        &a_span,
        format!("{}^(1)", t.a.algebra().name()),
    )?;
    let a_star = structure::subalgebra_from_span(
        &ambient,
        &astar_span,
        format!("{}^(1)", t.a_star.algebra().name()),
    )?;
    let mut lifted = ManinTriple::new(format!("loop({})", t.id), ambient, form, a, a_star);
    for (k, v) in &t.params {
        lifted.params.insert(k.clone(), v.clone());
    }
    lifted.params.insert("window".into(), window.to_string());
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form_properties;
    use crate::matrices::build_gl;
    use crate::scalar::Scalar;

    #[test]
    fn loop_bracket_degrees() {
        let (g, f) = build_gl(1, 1);
        let (lg, _, basis) = loopify(&g, &f, 1).unwrap();
        assert_eq!(lg.dim(), 12);
        // [a⊗x, b⊗x^{-1}] lands at degree 0
        let e12 = g.space().index_of("E(1,2)").unwrap();
        let e21 = g.space().index_of("E(2,1)").unwrap();
        let a = basis.index(1, e12).unwrap();
        let b = basis.index(-1, e21).unwrap();
        let v = lg
            .bracket_basis(a, b)
            .expect("in window")
            .clone();
        assert!(!v.is_zero());
        for (idx, _) in v.iter() {
            assert_eq!(basis.decode(idx).0, 0);
        }
        // degree 1 + 1 escapes the window
        let b2 = basis.index(1, e21).unwrap();
        assert!(lg.pair_escaped(a, b2));
    }

    #[test]
    fn residue_pairing_degrees() {
        let (g, f) = build_gl(1, 1);
        let (lg, lf, basis) = loopify(&g, &f, 2).unwrap();
        let e11 = g.space().index_of("E(1,1)").unwrap();
        let x0 = basis.index(0, e11).unwrap();
        // degree 0 against degree 0: no x^{-1} term
        assert_eq!(*lf.entry(x0, x0), Scalar::zero());
        // degree 2 against degree -3 is out of window, so pick 1 vs -2
        let xp = basis.index(1, e11).unwrap();
        let xm = basis.index(-2, e11).unwrap();
        assert_eq!(lf.entry(xp, xm), f.entry(e11, e11));
        // structural: window-conditional nondegeneracy with one boundary stratum
        let rep = form_properties(&lg, &lf);
        assert!(rep.nondegenerate.pass);
        assert_eq!(rep.nondegenerate.boundary, g.dim());
        // block anti-diagonality: gram entry vanishes unless degrees sum to -1
        for a in 0..lg.dim() {
            for b in 0..lg.dim() {
                let (p, i) = basis.decode(a);
                let (q, j) = basis.decode(b);
                if p + q != -1 {
                    assert!(lf.entry(a, b).is_zero());
                } else {
                    assert_eq!(lf.entry(a, b), f.entry(i, j));
                }
            }
        }
    }

    #[test]
    fn loop_axioms_in_window() {
        let (g, f) = build_gl(1, 1);
        let (lg, _, _) = loopify(&g, &f, 1).unwrap();
        assert!(lg.parity_violations().is_empty());
        let anti = lg.check_super_antisymmetry();
        assert!(anti.passed());
        let jac = lg.check_super_jacobi();
        assert!(jac.passed());
        assert!(jac.skipped > 0);
    }
}
