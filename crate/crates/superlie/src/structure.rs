//! Constructions on structure-constant algebras: verified subalgebras,
//! center, derived subalgebra, quotients with projection maps, restricted
//! and pushed-down forms, invariant-form solution spaces and a simplicity
//! scan.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lie::{BilinearForm, Grading, LieSuperAlgebra};
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};

/// A verified subalgebra: a graded reduced basis inside the parent,
/// together with the induced algebra on that basis.
#[derive(Clone, Debug)]
pub struct SubalgebraHandle {
    subspace: Subspace,
    basis: Vec<Vector>,
    algebra: LieSuperAlgebra,
}

impl SubalgebraHandle {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors in parent coordinates (reduced, homogeneous).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// The induced standalone algebra.
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> LieSuperAlgebra {
        self.algebra
    }

    /// Restriction of a parent form to the handle basis.
    pub fn restrict_form(&self, form: &BilinearForm, name: &str) -> BilinearForm {
        let n = self.basis.len();
        let mut gram = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                gram.set(r, c, form.eval(&self.basis[r], &self.basis[c]));
            }
        }
        BilinearForm::new(name, form.parity, gram)
    }
}

/// Builds a verified `SubalgebraHandle` from spanning vectors. The span
/// must be parity-graded and bracket-closed; on a truncated parent,
/// escaped products are inherited as escapes of the induced algebra.
pub fn subalgebra_from_span(
    g: &LieSuperAlgebra,
    vectors: &[Vector],
    name: impl Into<String>,
) -> Result<SubalgebraHandle, Error> {
    let subspace = Subspace::span(vectors, g.dim())?;
    let basis = subspace.graded_basis(g.space())?;
    induced_from_basis(g, subspace, basis, name)
}

fn induced_from_basis(
    g: &LieSuperAlgebra,
    subspace: Subspace,
    basis: Vec<Vector>,
    name: impl Into<String>,
) -> Result<SubalgebraHandle, Error> {
    let n = basis.len();
    let labels: Vec<String> = basis
        .iter()
        .map(|row| {
            let pivot = row.leading_index().expect("basis rows are nonzero");
            g.space().label(pivot).to_string()
        })
        .collect();
    let parities: Vec<Parity> = basis
        .iter()
        .map(|row| row.homogeneous_parity(g.space()).expect("rows are homogeneous"))
        .collect();
    let space = SuperSpace::new(labels, parities)?;

    let mut brackets = BTreeMap::new();
    let mut escapes = Vec::new();
    for r in 0..n {
        for s in 0..n {
            match g.bracket(&basis[r], &basis[s]) {
                None => escapes.push((r, s)),
                Some(w) => {
                    let coords = subspace.coordinates(&w).ok_or_else(|| Error::NotClosed {
                        left: basis[r].display(g.space()),
                        right: basis[s].display(g.space()),
                    })?;
                    if !coords.is_zero() {
                        brackets.insert((r, s), coords);
                    }
                }
            }
        }
    }

    let algebra = if escapes.is_empty() && !g.is_truncated() {
        LieSuperAlgebra::new(name, space, brackets)
    } else {
        let parent_grading = g.grading().ok_or_else(|| {
            Error::InvalidParameters("escaped products on an ungraded algebra".into())
        })?;
        let degrees = basis
            .iter()
            .map(|row| row_degree(parent_grading, row))
            .collect::<Result<Vec<_>, _>>()?;
        let grading = Grading {
            degrees,
            window: parent_grading.window,
        };
        LieSuperAlgebra::new_truncated(name, space, brackets, escapes, grading)
    };

    Ok(SubalgebraHandle {
        subspace,
        basis,
        algebra,
    })
}

fn row_degree(grading: &Grading, row: &Vector) -> Result<i64, Error> {
    let mut deg = None;
    for (i, _) in row.iter() {
        let d = grading.degrees[i];
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => {
                return Err(Error::InvalidParameters(
                    "subalgebra basis vector mixes degrees".into(),
                ))
            }
            _ => {}
        }
    }
    deg.ok_or_else(|| Error::InvalidParameters("zero basis vector".into()))
}

/// Kernel `{x : [x, e_j] = 0 for all j}` of the adjoint action.
pub fn center(g: &LieSuperAlgebra) -> Result<Subspace, Error> {
    let d = g.dim();
    if g.escaped_pair_count() > 0 {
        return Err(Error::InvalidParameters(
            "center is not defined on a window-truncated algebra".into(),
        ));
    }
    // Row (j,k) of the constraint system over unknowns x_i has entries
    // c(i,j -> k).
    let mut rows: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            if let Some(v) = g.bracket_basis(i, j) {
                for (k, c) in v.iter() {
                    rows.entry((j, k)).or_default().add_term(i, c);
                }
            }
        }
    }
    let constraint_rows: Vec<Vector> = rows.into_values().collect();
    let kernel = kernel_of_rows(&constraint_rows, d)?;
    Subspace::span(&kernel, d)
}

/// Null space of a sparse list of constraint rows.
pub fn kernel_of_rows(rows: &[Vector], ambient: usize) -> Result<Vec<Vector>, Error> {
    let rref = Subspace::span(rows, ambient)?;
    let pivot_set: std::collections::BTreeSet<usize> = rref.pivots().iter().copied().collect();
    let mut out = Vec::new();
    for free in 0..ambient {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = Vector::unit(free);
        for (row, &pivot) in rref.basis().iter().zip(rref.pivots()) {
            let c = row.coeff(free);
            if !c.is_zero() {
                v.add_term(pivot, &-&c);
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Span of all brackets `[e_i, e_j]`, returned as a verified handle.
pub fn derived_subalgebra(g: &LieSuperAlgebra, name: &str) -> Result<SubalgebraHandle, Error> {
    let d = g.dim();
    let mut vectors = Vec::new();
    for i in 0..d {
        for j in 0..d {
            match g.bracket_basis(i, j) {
                Some(v) if !v.is_zero() => vectors.push(v.clone()),
                Some(_) => {}
                None => {
                    return Err(Error::InvalidParameters(
                        "derived subalgebra is not defined on a window-truncated algebra".into(),
                    ))
                }
            }
        }
    }
    subalgebra_from_span(g, &vectors, name)
}

/// Projection data of a quotient `g / ideal`: quotient coordinates live on
/// the complement of the ideal's pivot columns.
#[derive(Clone, Debug)]
pub struct Projection {
    ideal: Subspace,
    /// Parent indices carrying the quotient coordinates, in order.
    complement: Vec<usize>,
}

impl Projection {
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Parent vector -> quotient coordinates.
    pub fn project(&self, v: &Vector) -> Vector {
        let reduced = self.ideal.reduce(v);
        let mut out = Vector::zero();
        for (i, c) in reduced.iter() {
            let pos = self
                .complement
                .binary_search(&i)
                .expect("reduced vector is supported on the complement");
            out.add_term(pos, c);
        }
        out
    }

    /// Quotient coordinates -> the canonical parent representative.
    pub fn lift(&self, v: &Vector) -> Vector {
        Vector::from_terms(v.iter().map(|(pos, c)| (self.complement[pos], c.clone())))
    }
}

/// Quotient by a verified ideal, with an explicit complement basis.
/// Returns the quotient algebra and the projection map.
pub fn quotient(
    g: &LieSuperAlgebra,
    ideal: &Subspace,
    name: impl Into<String>,
) -> Result<(LieSuperAlgebra, Projection), Error> {
    if g.escaped_pair_count() > 0 {
        return Err(Error::InvalidParameters(
            "quotient is not defined on a window-truncated algebra".into(),
        ));
    }
    let ideal_rows = ideal.graded_basis(g.space())?;
    // Ideal check, with witness.
    for row in &ideal_rows {
        for j in 0..g.dim() {
            let w = g.bracket_exact(row, &Vector::unit(j));
            if !ideal.contains(&w) {
                return Err(Error::NotAnIdeal {
                    inside: row.display(g.space()),
                    outside: g.space().label(j).to_string(),
                });
            }
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = ideal.pivots().iter().copied().collect();
    let complement: Vec<usize> = (0..g.dim()).filter(|i| !pivot_set.contains(i)).collect();
    let proj = Projection {
        ideal: ideal.clone(),
        complement: complement.clone(),
    };

    let labels = complement
        .iter()
        .map(|&i| g.space().label(i).to_string())
        .collect();
    let parities = complement.iter().map(|&i| g.space().parity(i)).collect();
    let space = SuperSpace::new(labels, parities)?;

    let mut brackets = BTreeMap::new();
    for (a, &ia) in complement.iter().enumerate() {
        for (b, &ib) in complement.iter().enumerate() {
            let w = g.bracket_exact(&Vector::unit(ia), &Vector::unit(ib));
            let coords = proj.project(&w);
            if !coords.is_zero() {
                brackets.insert((a, b), coords);
            }
        }
    }
    Ok((LieSuperAlgebra::new(name, space, brackets), proj))
}

/// Pushes a parent form down a quotient. Defined exactly when the ideal
/// lies in the form's radical; checked.
pub fn push_form_down(
    g: &LieSuperAlgebra,
    form: &BilinearForm,
    proj: &Projection,
    name: &str,
) -> Result<BilinearForm, Error> {
    for row in proj.ideal.basis() {
        for j in 0..g.dim() {
            if !form.eval(row, &Vector::unit(j)).is_zero() {
                return Err(Error::InvalidParameters(format!(
                    "form `{}` does not vanish on the ideal; push-down undefined",
                    form.name
                )));
            }
        }
    }
    let n = proj.complement.len();
    let mut gram = Mat::zeros(n, n);
    for (a, &ia) in proj.complement.iter().enumerate() {
        for (b, &ib) in proj.complement.iter().enumerate() {
            gram.set(a, b, form.entry(ia, ib).clone());
        }
    }
    Ok(BilinearForm::new(name, form.parity, gram))
}

/// Direct sum of two algebras on the disjoint union of bases; labels from
/// the right summand get a suffix when they collide.
pub fn direct_sum_algebras(
    g1: &LieSuperAlgebra,
    g2: &LieSuperAlgebra,
    name: impl Into<String>,
) -> LieSuperAlgebra {
    let d1 = g1.dim();
    let mut labels: Vec<String> = g1.space().labels().to_vec();
    for l in g2.space().labels() {
        let candidate = if labels.contains(l) {
            format!("{l}'")
        } else {
            l.clone()
        };
        labels.push(candidate);
    }
    let mut parities: Vec<Parity> = g1.space().parities().to_vec();
    parities.extend_from_slice(g2.space().parities());
    let space = SuperSpace::new(labels, parities).expect("disjoint labels");

    let mut brackets = BTreeMap::new();
    for ((i, j), v) in g1.bracket_entries() {
        brackets.insert((i, j), v.clone());
    }
    for ((i, j), v) in g2.bracket_entries() {
        let shifted = Vector::from_terms(v.iter().map(|(k, c)| (k + d1, c.clone())));
        brackets.insert((i + d1, j + d1), shifted);
    }
    LieSuperAlgebra::new(name, space, brackets)
}

/// Block-diagonal form on a direct sum, the second block scaled.
pub fn direct_sum_forms(
    b1: &BilinearForm,
    b2: &BilinearForm,
    scale2: &Scalar,
    name: &str,
) -> BilinearForm {
    assert_eq!(b1.parity, b2.parity, "parity mismatch in form direct sum");
    let d1 = b1.dim();
    let d2 = b2.dim();
    let mut gram = Mat::zeros(d1 + d2, d1 + d2);
    for i in 0..d1 {
        for j in 0..d1 {
            gram.set(i, j, b1.entry(i, j).clone());
        }
    }
    for i in 0..d2 {
        for j in 0..d2 {
            gram.set(d1 + i, d1 + j, b2.entry(i, j) * scale2);
        }
    }
    BilinearForm::new(name, b1.parity, gram)
}

/// Solution space of the linear system cutting out invariant
/// supersymmetric forms of the given parity: unknowns are Gram entries
/// `G(i,j)`, `i <= j`, on parity-allowed pairs; equations are
/// `B([e_i,e_j],e_k) = B(e_i,[e_j,e_k])` over all basis triples.
pub fn invariant_form_space(
    g: &LieSuperAlgebra,
    parity: Parity,
) -> Result<Vec<BilinearForm>, Error> {
    if g.escaped_pair_count() > 0 {
        return Err(Error::InvalidParameters(
            "invariant-form system is not defined on a window-truncated algebra".into(),
        ));
    }
    let d = g.dim();
    let mut var_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..d {
        for j in i..d {
            if g.space().parity(i).plus(g.space().parity(j)) != parity {
                continue;
            }
            if i == j && g.space().parity(i).is_odd() {
                continue; // G(i,i) = -G(i,i) forces zero
            }
            let next = var_of.len();
            var_of.insert((i, j), next);
        }
    }
    let nvars = var_of.len();
    // G(a,b) resolved through supersymmetry to (variable, sign), or None
    // when the entry is forced to zero.
    let resolve = |a: usize, b: usize| -> Option<(usize, i64)> {
        if a <= b {
            var_of.get(&(a, b)).map(|&v| (v, 1))
        } else {
            let sign = g.space().parity(a).koszul_sign(g.space().parity(b));
            var_of.get(&(b, a)).map(|&v| (v, sign))
        }
    };

    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let left = g.bracket_basis(i, j).expect("no escapes");
            for k in 0..d {
                let right = g.bracket_basis(j, k).expect("no escapes");
                let mut row = Vector::zero();
                for (m, c) in left.iter() {
                    if let Some((var, sign)) = resolve(m, k) {
                        row.add_term(var, &c.mul_int(sign));
                    }
                }
                for (m, c) in right.iter() {
                    if let Some((var, sign)) = resolve(i, m) {
                        row.add_term(var, &-&c.mul_int(sign));
                    }
                }
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = kernel_of_rows(&rows, nvars)?;
    let mut out = Vec::new();
    for (idx, sol) in kernel.iter().enumerate() {
        let mut gram = Mat::zeros(d, d);
        for (&(i, j), &var) in &var_of {
            let c = sol.coeff(var);
            if c.is_zero() {
                continue;
            }
            gram.set(i, j, c.clone());
            if i != j {
                let sign = g.space().parity(i).koszul_sign(g.space().parity(j));
                gram.set(j, i, c.mul_int(sign));
            }
        }
        out.push(BilinearForm::new(format!("invariant-{idx}"), parity, gram));
    }
    Ok(out)
}

/// Decides whether a linear pencil of Gram matrices contains a
/// nondegenerate member. `det` of the pencil is a polynomial of degree at
/// most `d` in each coefficient, so scanning a `(d+1)`-point grid per free
/// coefficient (after projectivizing the first one to 1) is exact for up
/// to three generators; larger spans fall back to a fixed pseudorandom
/// sample, which can only err on the degenerate side.
pub fn pencil_has_nondegenerate_member(mats: &[BilinearForm]) -> bool {
    if mats.is_empty() {
        return false;
    }
    let d = mats[0].dim();
    if d == 0 {
        return false;
    }
    for m in mats {
        if m.gram().rank() == d {
            return true;
        }
    }
    let s = mats.len();
    if s == 1 {
        return false;
    }
    let combine = |coeffs: &[i64]| -> Mat {
        let mut gram = Mat::zeros(d, d);
        for (m, &c) in mats.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for r in 0..d {
                for col in 0..d {
                    let add = m.entry(r, col).mul_int(c);
                    *gram.at_mut(r, col) += &add;
                }
            }
        }
        gram
    };
    let points = d as i64 + 1;
    if s <= 3 {
        // Projectivize each leading generator in turn.
        for lead in 0..s {
            let tail = s - lead - 1;
            let mut grid = vec![0i64; tail];
            loop {
                let mut coeffs = vec![0i64; s];
                coeffs[lead] = 1;
                for (t, &v) in grid.iter().enumerate() {
                    coeffs[lead + 1 + t] = v;
                }
                if combine(&coeffs).rank() == d {
                    return true;
                }
                // odometer over {0..points}^tail
                let mut pos = 0;
                loop {
                    if pos == tail {
                        break;
                    }
                    grid[pos] += 1;
                    if grid[pos] <= points {
                        break;
                    }
                    grid[pos] = 0;
                    pos += 1;
                }
                if tail == 0 || pos == tail {
                    break;
                }
            }
        }
        false
    } else {
        // Deterministic pseudorandom sampling; 4(d+1) draws.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % (2 * points as u64 + 1)) as i64 - points
        };
        for _ in 0..4 * points {
            let coeffs: Vec<i64> = (0..s).map(|_| next()).collect();
            if combine(&coeffs).rank() == d {
                return true;
            }
        }
        false
    }
}

/// Iterated bracket span of a generating set; errors past `cap`.
pub fn generated_subalgebra(
    g: &LieSuperAlgebra,
    generators: &[Vector],
    cap: usize,
) -> Result<Subspace, Error> {
    let mut span = Subspace::span(generators, g.dim())?;
    loop {
        let rows: Vec<Vector> = span.basis().to_vec();
        let mut grew = false;
        for (r, x) in rows.iter().enumerate() {
            for y in &rows[r..] {
                for w in [g.bracket(x, y), g.bracket(y, x)] {
                    let w = w.ok_or_else(|| {
                        Error::InvalidParameters(
                            "generator closure hit the truncation window".into(),
                        )
                    })?;
                    if !w.is_zero() && span.insert(w) {
                        grew = true;
                    }
                }
            }
        }
        if span.dim() > cap {
            return Err(Error::ClosureTooLarge {
                expected: cap,
                reached: span.dim(),
            });
        }
        if !grew {
            return Ok(span);
        }
    }
}

/// Smallest ideal containing the seed vectors.
pub fn ideal_closure(g: &LieSuperAlgebra, seed: &[Vector]) -> Result<Subspace, Error> {
    if g.escaped_pair_count() > 0 {
        return Err(Error::InvalidParameters(
            "ideal closure is not defined on a window-truncated algebra".into(),
        ));
    }
    let mut span = Subspace::span(seed, g.dim())?;
    let mut worklist: Vec<Vector> = span.basis().to_vec();
    while let Some(x) = worklist.pop() {
        for j in 0..g.dim() {
            let ej = Vector::unit(j);
            for w in [g.bracket_exact(&x, &ej), g.bracket_exact(&ej, &x)] {
                if !w.is_zero() {
                    let reduced = span.reduce(&w);
                    if !reduced.is_zero() {
                        span.insert(reduced.clone());
                        worklist.push(reduced);
                    }
                }
            }
        }
    }
    Ok(span)
}

/// Informational simplicity data from an ideal scan: the center dimension
/// and, if one was found, a proper nonzero ideal generated by a single
/// basis vector. Absence of such an ideal does not prove simplicity on its
/// own; a nonzero center or a found ideal does disprove it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityScan {
    pub dim: usize,
    pub center_dim: usize,
    pub proper_ideal_dim: Option<usize>,
}

impl SimplicityScan {
    pub fn not_simple(&self) -> bool {
        self.center_dim > 0 || self.proper_ideal_dim.is_some()
    }
}

pub fn simplicity_scan(g: &LieSuperAlgebra) -> Result<SimplicityScan, Error> {
    let d = g.dim();
    let center_dim = center(g)?.dim();
    let mut proper_ideal_dim = None;
    if d > 0 && center_dim == 0 {
        for i in 0..d {
            let ideal = ideal_closure(g, &[Vector::unit(i)])?;
            if ideal.dim() > 0 && ideal.dim() < d {
                proper_ideal_dim = Some(ideal.dim());
                break;
            }
        }
    }
    Ok(SimplicityScan {
        dim: d,
        center_dim,
        proper_ideal_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form_properties;

    fn sl2() -> LieSuperAlgebra {
        let space = SuperSpace::new(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
        )
        .unwrap();
        let mut b = BTreeMap::new();
        let two = |i| Vector::from_terms([(i, Scalar::from_int(2))]);
        b.insert((0, 1), two(1));
        b.insert((1, 0), two(1).negated());
        b.insert((0, 2), two(2).negated());
        b.insert((2, 0), two(2));
        b.insert((1, 2), Vector::unit(0));
        b.insert((2, 1), Vector::unit(0).negated());
        LieSuperAlgebra::new("sl(2)", space, b)
    }

    #[test]
    fn sl2_center_is_zero_and_simple() {
        let g = sl2();
        assert_eq!(center(&g).unwrap().dim(), 0);
        let scan = simplicity_scan(&g).unwrap();
        assert!(!scan.not_simple());
    }

    #[test]
    fn span_not_closed_has_witness() {
        let g = sl2();
        let err = subalgebra_from_span(&g, &[Vector::unit(1), Vector::unit(2)], "bad");
        match err {
            Err(Error::NotClosed { .. }) => {}
            other => panic!("expected NotClosed, got {other:?}"),
        }
    }

    #[test]
    fn borel_is_closed_abelian_span_too() {
        let g = sl2();
        // span(e) is abelian, hence closed.
        let h = subalgebra_from_span(&g, &[Vector::unit(1)], "n+").unwrap();
        assert_eq!(h.dim(), 1);
        // Borel span(h, e) is closed with [h,e] = 2e.
        let b = subalgebra_from_span(&g, &[Vector::unit(0), Vector::unit(1)], "b+").unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.algebra().check_super_jacobi().passed());
    }

    #[test]
    fn quotient_by_zero_is_isomorphic_copy() {
        let g = sl2();
        let zero = Subspace::empty(3);
        let (q, proj) = quotient(&g, &zero, "sl(2)/0").unwrap();
        assert_eq!(q.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    q.bracket_exact(&Vector::unit(i), &Vector::unit(j)),
                    proj.project(&g.bracket_exact(&Vector::unit(i), &Vector::unit(j)))
                );
            }
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let g = sl2();
        let not_ideal = Subspace::span(&[Vector::unit(1)], 3).unwrap();
        assert!(matches!(
            quotient(&g, &not_ideal, "bad"),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn invariant_forms_of_sl2_are_killing_multiples() {
        let g = sl2();
        let sols = invariant_form_space(&g, Parity::Even).unwrap();
        assert_eq!(sols.len(), 1);
        let rep = form_properties(&g, &sols[0]);
        assert!(rep.supersymmetric.passed() && rep.invariant.passed());
        assert!(pencil_has_nondegenerate_member(&sols));
        // No odd invariant forms on a purely even algebra.
        let odd = invariant_form_space(&g, Parity::Odd).unwrap();
        assert!(odd.is_empty());
    }

    #[test]
    fn derived_of_sl2_is_sl2() {
        let g = sl2();
        let der = derived_subalgebra(&g, "derived").unwrap();
        assert_eq!(der.dim(), 3);
    }

    #[test]
    fn generated_subalgebra_terminates() {
        let g = sl2();
        let span = generated_subalgebra(&g, &[Vector::unit(1), Vector::unit(2)], 3).unwrap();
        assert_eq!(span.dim(), 3);
        // Abelian pair stays where it started.
        let small = generated_subalgebra(&g, &[Vector::unit(1)], 3).unwrap();
        assert_eq!(small.dim(), 1);
    }
}
