//! Matrix Lie superalgebra families in the standard block format —
//! gl(m|n), sl, psl, the queer family q/sq/psq, the periplectic family
//! pe/spe — their trace forms, and the triangular dual patterns used by
//! the matrix Manin triples.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lie::{BilinearForm, LieSuperAlgebra};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};
use crate::structure::{self, Projection, SubalgebraHandle};

/// A homogeneous supermatrix in standard (m|n) block format. Even
/// elements have vanishing off-diagonal blocks, odd ones vanishing
/// diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMat {
    m: usize,
    n: usize,
    parity: Parity,
    mat: Mat,
}

impl SuperMat {
    pub fn zero(m: usize, n: usize, parity: Parity) -> Self {
        SuperMat {
            m,
            n,
            parity,
            mat: Mat::zeros(m + n, m + n),
        }
    }

    fn block_parity(m: usize, a: usize, b: usize) -> Parity {
        let pa = Parity::from_usize(usize::from(a >= m));
        let pb = Parity::from_usize(usize::from(b >= m));
        pa.plus(pb)
    }

    /// Matrix unit `E(a,b)` (0-based), homogeneous of its block parity.
    pub fn unit(m: usize, n: usize, a: usize, b: usize) -> Self {
        let mut x = SuperMat::zero(m, n, Self::block_parity(m, a, b));
        x.mat.set(a, b, Scalar::one());
        x
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn set(&mut self, a: usize, b: usize, c: Scalar) {
        debug_assert_eq!(
            Self::block_parity(self.m, a, b),
            self.parity,
            "entry outside the homogeneous block pattern"
        );
        self.mat.set(a, b, c);
    }

    pub fn add_scaled(&mut self, other: &SuperMat, c: &Scalar) {
        assert_eq!(self.parity, other.parity);
        for a in 0..self.m + self.n {
            for b in 0..self.m + self.n {
                let v = other.mat.at(a, b);
                if !v.is_zero() {
                    *self.mat.at_mut(a, b) += &(v * c);
                }
            }
        }
    }

    /// `str X = tr A - (-1)^{p(X)} tr D`.
    pub fn supertrace(&self) -> Scalar {
        let mut tr_a = Scalar::zero();
        for a in 0..self.m {
            tr_a += self.mat.at(a, a);
        }
        let mut tr_d = Scalar::zero();
        for a in self.m..self.m + self.n {
            tr_d += self.mat.at(a, a);
        }
        let sign = if self.parity.is_odd() { 1 } else { -1 };
        tr_a + tr_d.mul_int(sign)
    }

    pub fn product(&self, other: &SuperMat) -> SuperMat {
        assert_eq!((self.m, self.n), (other.m, other.n));
        SuperMat {
            m: self.m,
            n: self.n,
            parity: self.parity.plus(other.parity),
            mat: self.mat.mul(&other.mat),
        }
    }

    /// `[X,Y] = XY - (-1)^{p(X)p(Y)} YX`.
    pub fn supercommutator(&self, other: &SuperMat) -> SuperMat {
        let mut out = self.product(other);
        let yx = other.product(self);
        let sign = self.parity.koszul_sign(other.parity);
        out.add_scaled(&yx, &Scalar::from_int(-sign));
        out
    }

    /// Flattens to a coordinate vector over the gl(m|n) matrix-unit basis,
    /// entry `(a,b)` at index `a*(m+n)+b`.
    pub fn flatten(&self) -> Vector {
        let d = self.m + self.n;
        let mut v = Vector::zero();
        for a in 0..d {
            for b in 0..d {
                v.add_term(a * d + b, self.mat.at(a, b));
            }
        }
        v
    }
}

/// A homogeneous element of the queer family, stored by its two
/// independent blocks: even elements embed as `(A 0; 0 A)`, odd ones as
/// `(0 B; B 0)` inside gl(n|n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueerMat {
    n: usize,
    parity: Parity,
    block: Mat,
}

impl QueerMat {
    pub fn new(n: usize, parity: Parity, block: Mat) -> Self {
        assert_eq!(block.rows(), n);
        assert_eq!(block.cols(), n);
        QueerMat { n, parity, block }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `qtr Y = tr B`: the trace of the odd block; zero on even elements.
    pub fn queertrace(&self) -> Scalar {
        match self.parity {
            Parity::Even => Scalar::zero(),
            Parity::Odd => {
                let mut t = Scalar::zero();
                for a in 0..self.n {
                    t += self.block.at(a, a);
                }
                t
            }
        }
    }

    /// Explicit injection into gl(n|n).
    pub fn embed(&self) -> SuperMat {
        let mut x = SuperMat::zero(self.n, self.n, self.parity);
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.block.at(a, b);
                if c.is_zero() {
                    continue;
                }
                match self.parity {
                    Parity::Even => {
                        x.set(a, b, c.clone());
                        x.set(self.n + a, self.n + b, c.clone());
                    }
                    Parity::Odd => {
                        x.set(a, self.n + b, c.clone());
                        x.set(self.n + a, b, c.clone());
                    }
                }
            }
        }
        x
    }
}

/// The supported matrix families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gl,
    Sl,
    Psl,
    Q,
    Sq,
    Psq,
    Pe,
    Spe,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "gl" => Family::Gl,
            "sl" => Family::Sl,
            "psl" => Family::Psl,
            "q" => Family::Q,
            "sq" => Family::Sq,
            "psq" => Family::Psq,
            "pe" => Family::Pe,
            "spe" => Family::Spe,
            _ => return None,
        })
    }
}

/// One family basis element: label, the matrix, and a signature entry
/// whose coefficient in any span-member recovers the coordinate on this
/// element.
struct BasisItem {
    label: String,
    mat: SuperMat,
    signature: (usize, usize),
}

/// A family basis with its coordinate extraction.
pub struct MatrixBasis {
    m: usize,
    n: usize,
    items: Vec<BasisItem>,
}

impl MatrixBasis {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn mat(&self, i: usize) -> &SuperMat {
        &self.items[i].mat
    }

    pub fn flatten(&self, i: usize) -> Vector {
        self.items[i].mat.flatten()
    }

    pub fn flatten_all(&self) -> Vec<Vector> {
        self.items.iter().map(|it| it.mat.flatten()).collect()
    }

    /// Coordinates of a homogeneous matrix in this basis, read off the
    /// signature entries; panics if the matrix leaves the span.
    pub fn expand(&self, x: &SuperMat) -> Vector {
        let mut coords = Vector::zero();
        let mut rebuilt = SuperMat::zero(self.m, self.n, x.parity());
        for (idx, item) in self.items.iter().enumerate() {
            if item.mat.parity() != x.parity() {
                continue;
            }
            let c = x.mat().at(item.signature.0, item.signature.1);
            if !c.is_zero() {
                coords.add_term(idx, c);
                rebuilt.add_scaled(&item.mat, c);
            }
        }
        assert_eq!(rebuilt.mat(), x.mat(), "matrix leaves the family span");
        coords
    }

    pub fn algebra(&self, name: &str) -> LieSuperAlgebra {
        let labels: Vec<String> = self.items.iter().map(|it| it.label.clone()).collect();
        let parities: Vec<Parity> = self.items.iter().map(|it| it.mat.parity()).collect();
        let space = SuperSpace::new(labels, parities).expect("family labels are distinct");
        let mut brackets = BTreeMap::new();
        for (i, xi) in self.items.iter().enumerate() {
            for (j, xj) in self.items.iter().enumerate() {
                let comm = xi.mat.supercommutator(&xj.mat);
                let coords = self.expand(&comm);
                if !coords.is_zero() {
                    brackets.insert((i, j), coords);
                }
            }
        }
        LieSuperAlgebra::new(name, space, brackets)
    }

    pub fn form(
        &self,
        name: &str,
        parity: Parity,
        pair: impl Fn(&SuperMat, &SuperMat) -> Scalar,
    ) -> BilinearForm {
        let d = self.items.len();
        let mut gram = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, pair(&self.items[i].mat, &self.items[j].mat));
            }
        }
        BilinearForm::new(name, parity, gram)
    }
}

pub fn gl_basis(m: usize, n: usize) -> MatrixBasis {
    let d = m + n;
    let mut items = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            items.push(BasisItem {
                label: format!("E({},{})", a + 1, b + 1),
                mat: SuperMat::unit(m, n, a, b),
                signature: (a, b),
            });
        }
    }
    MatrixBasis { m, n, items }
}

/// gl(m|n) with the even nondegenerate form `str(x·y)`.
pub fn build_gl(m: usize, n: usize) -> (LieSuperAlgebra, BilinearForm) {
    assert!(m + n > 0, "gl(0|0) is empty");
    let basis = gl_basis(m, n);
    let algebra = basis.algebra(&format!("gl({m}|{n})"));
    let form = basis.form("str", Parity::Even, |x, y| x.product(y).supertrace());
    (algebra, form)
}

pub fn sl_basis(m: usize, n: usize) -> MatrixBasis {
    let d = m + n;
    let mut items = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if a != b {
                items.push(BasisItem {
                    label: format!("E({},{})", a + 1, b + 1),
                    mat: SuperMat::unit(m, n, a, b),
                    signature: (a, b),
                });
            }
        }
    }
    // Supertraceless diagonal: E(k,k)-E(1,1) for k in the even block,
    // E(m+j,m+j)+E(1,1) in the odd block; signatures on the k-th slot.
    for k in 1..m {
        let mut x = SuperMat::unit(m, n, k, k);
        x.add_scaled(&SuperMat::unit(m, n, 0, 0), &Scalar::from_int(-1));
        items.push(BasisItem {
            label: format!("D({})", k + 1),
            mat: x,
            signature: (k, k),
        });
    }
    for j in 0..n {
        let mut x = SuperMat::unit(m, n, m + j, m + j);
        x.add_scaled(&SuperMat::unit(m, n, 0, 0), &Scalar::one());
        items.push(BasisItem {
            label: format!("D({})", m + j + 1),
            mat: x,
            signature: (m + j, m + j),
        });
    }
    MatrixBasis { m, n, items }
}

/// sl(m|n) (supertraceless part) with the restricted str form; the form
/// is degenerate exactly when m = n.
pub fn build_sl(m: usize, n: usize) -> (LieSuperAlgebra, BilinearForm) {
    assert!(m + n > 1, "sl needs dimension");
    let basis = sl_basis(m, n);
    let algebra = basis.algebra(&format!("sl({m}|{n})"));
    let form = basis.form("str", Parity::Even, |x, y| x.product(y).supertrace());
    (algebra, form)
}

/// The psl(n|n) chain: gl ⊃ sl → psl = sl/⟨1⟩ with the pushed-down form.
pub struct PslChain {
    pub gl: LieSuperAlgebra,
    pub gl_form: BilinearForm,
    pub sl: LieSuperAlgebra,
    pub sl_form: BilinearForm,
    pub psl: LieSuperAlgebra,
    pub psl_form: BilinearForm,
    pub proj: Projection,
    sl_items: MatrixBasis,
}

impl PslChain {
    /// Image in psl of a supertraceless homogeneous matrix.
    pub fn to_psl(&self, x: &SuperMat) -> Vector {
        self.proj.project(&self.sl_items.expand(x))
    }
}

pub fn psl_chain(n: usize) -> Result<PslChain, Error> {
    if n < 1 {
        return Err(Error::InvalidParameters("psl requires n >= 1".into()));
    }
    let (gl, gl_form) = build_gl(n, n);
    let basis = sl_basis(n, n);
    let sl = basis.algebra(&format!("sl({n}|{n})"));
    let sl_form = basis.form("str", Parity::Even, |x, y| x.product(y).supertrace());
    let ones = {
        let mut x = SuperMat::zero(n, n, Parity::Even);
        for a in 0..2 * n {
            x.set(a, a, Scalar::one());
        }
        x
    };
    let center_coords = basis.expand(&ones);
    let ideal = crate::linalg::Subspace::span(&[center_coords], sl.dim())?;
    let (psl, proj) = structure::quotient(&sl, &ideal, format!("psl({n}|{n})"))?;
    let psl_form = structure::push_form_down(&sl, &sl_form, &proj, "str")?;
    Ok(PslChain {
        gl,
        gl_form,
        sl,
        sl_form,
        psl,
        psl_form,
        proj,
        sl_items: basis,
    })
}

pub fn q_basis(n: usize) -> MatrixBasis {
    let mut items = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut block = Mat::zeros(n, n);
            block.set(a, b, Scalar::one());
            items.push(BasisItem {
                label: format!("A({},{})", a + 1, b + 1),
                mat: QueerMat::new(n, Parity::Even, block).embed(),
                signature: (a, b),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let mut block = Mat::zeros(n, n);
            block.set(a, b, Scalar::one());
            items.push(BasisItem {
                label: format!("B({},{})", a + 1, b + 1),
                mat: QueerMat::new(n, Parity::Odd, block).embed(),
                signature: (a, n + b),
            });
        }
    }
    MatrixBasis { m: n, n, items }
}

fn qtr_pair(x: &SuperMat, y: &SuperMat) -> Scalar {
    // qtr of the embedded product: trace of its upper-right block.
    let prod = x.product(y);
    if !prod.parity().is_odd() {
        return Scalar::zero();
    }
    let d = prod.mat().rows() / 2;
    let mut t = Scalar::zero();
    for a in 0..d {
        t += prod.mat().at(a, d + a);
    }
    t
}

/// q(n) with the odd nondegenerate form `qtr(x·y)`.
pub fn build_q(n: usize) -> (LieSuperAlgebra, BilinearForm) {
    assert!(n >= 1);
    let basis = q_basis(n);
    let algebra = basis.algebra(&format!("q({n})"));
    let form = basis.form("qtr", Parity::Odd, qtr_pair);
    (algebra, form)
}

fn sq_basis(n: usize) -> MatrixBasis {
    let mut items = Vec::new();
    for it in q_basis(n).items {
        let (a, b) = it.signature;
        if b >= n && a == b - n {
            continue; // drop odd diagonal units, re-added as traceless combos
        }
        items.push(it);
    }
    for k in 1..n {
        let mut block = Mat::zeros(n, n);
        block.set(k, k, Scalar::one());
        block.set(0, 0, Scalar::from_int(-1));
        items.push(BasisItem {
            label: format!("BD({})", k + 1),
            mat: QueerMat::new(n, Parity::Odd, block).embed(),
            signature: (k, n + k),
        });
    }
    MatrixBasis { m: n, n, items }
}

/// sq(n): the queertraceless subalgebra of q(n), with the restricted qtr
/// form (radical = scalars).
pub fn build_sq(n: usize) -> (LieSuperAlgebra, BilinearForm) {
    assert!(n >= 1);
    let basis = sq_basis(n);
    let algebra = basis.algebra(&format!("sq({n})"));
    let form = basis.form("qtr", Parity::Odd, qtr_pair);
    (algebra, form)
}

/// The psq(n) chain: q ⊃ sq → psq = sq/⟨1⟩ with the pushed-down qtr form.
pub struct PsqChain {
    pub q: LieSuperAlgebra,
    pub q_form: BilinearForm,
    pub sq: LieSuperAlgebra,
    pub psq: LieSuperAlgebra,
    pub psq_form: BilinearForm,
    pub proj: Projection,
}

pub fn psq_chain(n: usize) -> Result<PsqChain, Error> {
    if n < 2 {
        return Err(Error::InvalidParameters("psq requires n >= 2".into()));
    }
    let (q, q_form) = build_q(n);
    let basis = sq_basis(n);
    let sq = basis.algebra(&format!("sq({n})"));
    let sq_form = basis.form("qtr", Parity::Odd, qtr_pair);
    let ones = basis.expand(&QueerMat::new(n, Parity::Even, Mat::identity(n)).embed());
    let ideal = crate::linalg::Subspace::span(&[ones], sq.dim())?;
    let (psq, proj) = structure::quotient(&sq, &ideal, format!("psq({n})"))?;
    let psq_form = structure::push_form_down(&sq, &sq_form, &proj, "qtr")?;
    Ok(PsqChain {
        q,
        q_form,
        sq,
        psq,
        psq_form,
        proj,
    })
}

pub fn pe_basis(n: usize) -> MatrixBasis {
    // Convention: elements (A  B; C  -A^T) with B symmetric, C
    // antisymmetric; dim 2n².
    let mut items = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut x = SuperMat::zero(n, n, Parity::Even);
            x.set(a, b, Scalar::one());
            x.set(n + b, n + a, Scalar::from_int(-1));
            items.push(BasisItem {
                label: format!("A({},{})", a + 1, b + 1),
                mat: x,
                signature: (a, b),
            });
        }
    }
    for a in 0..n {
        for b in a..n {
            let mut x = SuperMat::zero(n, n, Parity::Odd);
            x.set(a, n + b, Scalar::one());
            if a != b {
                x.set(b, n + a, Scalar::one());
            }
            items.push(BasisItem {
                label: format!("S({},{})", a + 1, b + 1),
                mat: x,
                signature: (a, n + b),
            });
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            let mut x = SuperMat::zero(n, n, Parity::Odd);
            x.set(n + a, b, Scalar::one());
            x.set(n + b, a, Scalar::from_int(-1));
            items.push(BasisItem {
                label: format!("C({},{})", a + 1, b + 1),
                mat: x,
                signature: (n + a, b),
            });
        }
    }
    MatrixBasis { m: n, n, items }
}

/// pe(n), the periplectic family; carries no canonical invariant form.
pub fn build_pe(n: usize) -> LieSuperAlgebra {
    assert!(n >= 1);
    pe_basis(n).algebra(&format!("pe({n})"))
}

fn spe_basis(n: usize) -> MatrixBasis {
    let mut items = Vec::new();
    for it in pe_basis(n).items {
        let (a, b) = it.signature;
        if a == b && a < n {
            continue; // diagonal A-units, replaced by traceless combos
        }
        items.push(it);
    }
    for k in 1..n {
        let mut x = SuperMat::zero(n, n, Parity::Even);
        x.set(k, k, Scalar::one());
        x.set(n + k, n + k, Scalar::from_int(-1));
        x.set(0, 0, Scalar::from_int(-1));
        x.set(n, n, Scalar::one());
        items.push(BasisItem {
            label: format!("D({})", k + 1),
            mat: x,
            signature: (k, k),
        });
    }
    MatrixBasis { m: n, n, items }
}

/// spe(n) = pe(n) ∩ sl(n|n).
pub fn build_spe(n: usize) -> LieSuperAlgebra {
    assert!(n >= 2, "spe(1) is zero-dimensional");
    spe_basis(n).algebra(&format!("spe({n})"))
}

/// Uniform entry point mirroring the CLI family names. The second
/// component is the canonical invariant form when the family has one.
pub fn build_family(
    family: Family,
    m: usize,
    n: usize,
) -> Result<(LieSuperAlgebra, Option<BilinearForm>), Error> {
    let need_square = |fam: &str| {
        if m != n {
            Err(Error::InvalidParameters(format!("{fam} requires m = n")))
        } else {
            Ok(())
        }
    };
    Ok(match family {
        Family::Gl => {
            let (g, f) = build_gl(m, n);
            (g, Some(f))
        }
        Family::Sl => {
            let (g, f) = build_sl(m, n);
            (g, Some(f))
        }
        Family::Psl => {
            need_square("psl")?;
            let chain = psl_chain(n)?;
            (chain.psl, Some(chain.psl_form))
        }
        Family::Q => {
            need_square("q")?;
            let (g, f) = build_q(n);
            (g, Some(f))
        }
        Family::Sq => {
            need_square("sq")?;
            let (g, f) = build_sq(n);
            (g, Some(f))
        }
        Family::Psq => {
            need_square("psq")?;
            let chain = psq_chain(n)?;
            (chain.psq, Some(chain.psq_form))
        }
        Family::Pe => {
            need_square("pe")?;
            (build_pe(n), None)
        }
        Family::Spe => {
            need_square("spe")?;
            (build_spe(n), None)
        }
    })
}

/// The queer subalgebra q(n) embedded in gl(n|n), as a verified handle.
pub fn queer_in_gl(gl: &LieSuperAlgebra, n: usize) -> Result<SubalgebraHandle, Error> {
    structure::subalgebra_from_span(gl, &q_basis(n).flatten_all(), format!("q({n})"))
}

/// The periplectic subalgebra pe(n) embedded in gl(n|n).
pub fn pe_in_gl(gl: &LieSuperAlgebra, n: usize) -> Result<SubalgebraHandle, Error> {
    structure::subalgebra_from_span(gl, &pe_basis(n).flatten_all(), format!("pe({n})"))
}

/// Which triangular dual pattern to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualPattern {
    /// (X Y; 0 Z): X upper, Z lower, X_ii = -Z_ii, Y arbitrary.
    QueerDual,
    /// (X Y; Z T): X, Z, T upper, X_ii = T_ii, Y strictly upper.
    PeriplecticDual,
}

/// Spanning matrices of a dual pattern; with `traceless` the tied
/// diagonal is additionally constrained to trace 0.
pub fn dual_pattern_mats(pattern: DualPattern, n: usize, traceless: bool) -> Vec<SuperMat> {
    let m = n;
    let mut mats: Vec<SuperMat> = Vec::new();
    match pattern {
        DualPattern::QueerDual => {
            // A strictly upper
            for a in 0..n {
                for b in (a + 1)..n {
                    mats.push(SuperMat::unit(m, n, a, b));
                }
            }
            // D strictly lower
            for a in 0..n {
                for b in 0..a {
                    mats.push(SuperMat::unit(m, n, n + a, n + b));
                }
            }
            // tied diagonal E(k,k) - E(n+k,n+k)
            let tied = |k: usize| {
                let mut x = SuperMat::unit(m, n, k, k);
                x.add_scaled(&SuperMat::unit(m, n, n + k, n + k), &Scalar::from_int(-1));
                x
            };
            if traceless {
                for k in 1..n {
                    let mut x = tied(k);
                    x.add_scaled(&tied(0), &Scalar::from_int(-1));
                    mats.push(x);
                }
            } else {
                for k in 0..n {
                    mats.push(tied(k));
                }
            }
            // B arbitrary
            for a in 0..n {
                for b in 0..n {
                    mats.push(SuperMat::unit(m, n, a, n + b));
                }
            }
        }
        DualPattern::PeriplecticDual => {
            // A strictly upper, D strictly upper, B strictly upper, C upper
            for a in 0..n {
                for b in (a + 1)..n {
                    mats.push(SuperMat::unit(m, n, a, b));
                    mats.push(SuperMat::unit(m, n, n + a, n + b));
                    mats.push(SuperMat::unit(m, n, a, n + b));
                }
            }
            for a in 0..n {
                for b in a..n {
                    mats.push(SuperMat::unit(m, n, n + a, b));
                }
            }
            // tied diagonal E(k,k) + E(n+k,n+k)
            let tied = |k: usize| {
                let mut x = SuperMat::unit(m, n, k, k);
                x.add_scaled(&SuperMat::unit(m, n, n + k, n + k), &Scalar::one());
                x
            };
            if traceless {
                for k in 1..n {
                    let mut x = tied(k);
                    x.add_scaled(&tied(0), &Scalar::from_int(-1));
                    mats.push(x);
                }
            } else {
                for k in 0..n {
                    mats.push(tied(k));
                }
            }
        }
    }
    mats
}

/// Spanning vectors (gl(n|n) coordinates) of a dual pattern.
pub fn dual_pattern_vectors(pattern: DualPattern, n: usize, traceless: bool) -> Vec<Vector> {
    dual_pattern_mats(pattern, n, traceless)
        .iter()
        .map(SuperMat::flatten)
        .collect()
}

/// The verified dual subalgebra inside gl(n|n) for the matrix examples.
pub fn dual_subalgebra(
    gl: &LieSuperAlgebra,
    pattern: DualPattern,
    n: usize,
) -> Result<SubalgebraHandle, Error> {
    let vectors = dual_pattern_vectors(pattern, n, false);
    structure::subalgebra_from_span(gl, &vectors, "dual-pattern")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form_properties;
    use crate::linalg::direct_sum_check;

    #[test]
    fn supertrace_formula() {
        // even X in gl(1|1) with A = (2), D = (1): str = 1
        let mut x = SuperMat::zero(1, 1, Parity::Even);
        x.set(0, 0, Scalar::from_int(2));
        x.set(1, 1, Scalar::one());
        assert_eq!(x.supertrace(), Scalar::one());
        // identity of gl(n|n) has str 0
        let mut id = SuperMat::zero(2, 2, Parity::Even);
        for a in 0..4 {
            id.set(a, a, Scalar::one());
        }
        assert_eq!(id.supertrace(), Scalar::zero());
        // odd elements have vanishing supertrace
        let odd = SuperMat::unit(2, 2, 0, 2);
        assert_eq!(odd.supertrace(), Scalar::zero());
    }

    #[test]
    fn queertrace_formula() {
        let mut b = Mat::zeros(2, 2);
        b.set(0, 0, Scalar::one());
        b.set(1, 1, Scalar::one());
        let y = QueerMat::new(2, Parity::Odd, b);
        assert_eq!(y.queertrace(), Scalar::from_int(2));
        let even = QueerMat::new(2, Parity::Even, Mat::identity(2));
        assert_eq!(even.queertrace(), Scalar::zero());
    }

    #[test]
    fn str_vanishes_on_q() {
        // str is identically zero on q(n)
        let basis = q_basis(2);
        for i in 0..basis.len() {
            assert_eq!(basis.mat(i).supertrace(), Scalar::zero());
        }
    }

    #[test]
    fn gl11_odd_anticommutator() {
        // [E12, E21] = E11 + E22 in gl(1|1)
        let (gl, _) = build_gl(1, 1);
        let e12 = gl.space().index_of("E(1,2)").unwrap();
        let e21 = gl.space().index_of("E(2,1)").unwrap();
        let v = gl.bracket_exact(&Vector::unit(e12), &Vector::unit(e21));
        let e11 = gl.space().index_of("E(1,1)").unwrap();
        let e22 = gl.space().index_of("E(2,2)").unwrap();
        let expect = Vector::from_terms([(e11, Scalar::one()), (e22, Scalar::one())]);
        assert_eq!(v, expect);
    }

    #[test]
    fn family_dimensions() {
        assert_eq!(build_gl(2, 2).0.dim(), 16);
        assert_eq!(build_sl(2, 2).0.dim(), 15);
        assert_eq!(build_q(2).0.dim(), 8);
        assert_eq!(build_sq(2).0.dim(), 7);
        assert_eq!(build_pe(2).dim(), 8);
        assert_eq!(build_spe(2).dim(), 7);
        assert_eq!(psl_chain(2).unwrap().psl.dim(), 14);
        assert_eq!(psq_chain(2).unwrap().psq.dim(), 6);
    }

    #[test]
    fn small_families_pass_axioms() {
        for g in [
            build_gl(2, 1).0,
            build_sl(2, 1).0,
            build_q(2).0,
            build_pe(2),
            build_spe(2),
            psl_chain(2).unwrap().psl,
            psq_chain(2).unwrap().psq,
        ] {
            assert!(g.parity_violations().is_empty(), "{}", g.name());
            assert!(g.check_super_antisymmetry().passed(), "{}", g.name());
            assert!(g.check_super_jacobi().passed(), "{}", g.name());
        }
    }

    #[test]
    fn str_form_on_gl22_certifies() {
        let (g, f) = build_gl(2, 2);
        let rep = form_properties(&g, &f);
        assert!(rep.all_pass());
        assert_eq!(f.parity, Parity::Even);
    }

    #[test]
    fn qtr_form_on_q2_certifies_odd() {
        let (g, f) = build_q(2);
        let rep = form_properties(&g, &f);
        assert!(rep.all_pass());
        assert_eq!(f.parity, Parity::Odd);
    }

    #[test]
    fn str_form_degenerate_on_sl22_with_center_radical() {
        let (g, f) = build_sl(2, 2);
        let rep = form_properties(&g, &f);
        assert!(!rep.nondegenerate.pass);
        assert_eq!(rep.nondegenerate.rank, 14); // 4n²-2
        let radical = crate::lie::form_radical(&f);
        let center = structure::center(&g).unwrap();
        assert_eq!(radical.len(), 1);
        assert!(center.contains(&radical[0]));
        assert_eq!(center.dim(), 1);
    }

    #[test]
    fn killing_forms_of_the_equal_rank_families() {
        // On gl(n|n) the Killing form collapses to -2·str(x)str(y)
        // (rank 1); it vanishes identically on sl(n|n) and on q(n), which
        // nevertheless carry nondegenerate invariant forms.
        for n in 1..=2 {
            let basis = gl_basis(n, n);
            let (g, _) = build_gl(n, n);
            let k = g.killing_form().unwrap();
            assert_eq!(k.gram().rank(), 1, "killing of gl({n}|{n})");
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let expect = (&basis.mat(i).supertrace() * &basis.mat(j).supertrace())
                        .mul_int(-2);
                    assert_eq!(*k.entry(i, j), expect);
                }
            }
        }
        for n in 1..=2 {
            let (g, _) = build_sl(n, n);
            assert_eq!(g.killing_form().unwrap().gram().rank(), 0, "sl({n}|{n})");
            let (q, _) = build_q(n);
            assert_eq!(q.killing_form().unwrap().gram().rank(), 0, "q({n})");
        }
    }

    #[test]
    fn queer_dual_splits_gl() {
        let (gl, _) = build_gl(2, 2);
        let q = queer_in_gl(&gl, 2).unwrap();
        let dual = dual_subalgebra(&gl, DualPattern::QueerDual, 2).unwrap();
        assert_eq!(q.dim(), 8);
        assert_eq!(dual.dim(), 8);
        assert!(direct_sum_check(q.subspace(), dual.subspace(), 16).holds());
    }

    #[test]
    fn periplectic_dual_splits_gl() {
        let (gl, _) = build_gl(2, 2);
        let pe = pe_in_gl(&gl, 2).unwrap();
        let dual = dual_subalgebra(&gl, DualPattern::PeriplecticDual, 2).unwrap();
        assert_eq!(pe.dim(), 8);
        assert_eq!(dual.dim(), 8);
        assert!(direct_sum_check(pe.subspace(), dual.subspace(), 16).holds());
    }

    #[test]
    fn queer_dual_n1_dimension() {
        let (gl, _) = build_gl(1, 1);
        let dual = dual_subalgebra(&gl, DualPattern::QueerDual, 1).unwrap();
        assert_eq!(dual.dim(), 2); // tied diagonal plus Y
    }

    #[test]
    fn pe_is_full_solution_of_defining_conditions() {
        // pe(n) = {(A B; C D) : D = -A^T, B = B^T, C = -C^T}: the span of
        // our basis must equal the kernel of those linear conditions.
        let n = 2;
        let d = 2 * n;
        let vectors: Vec<Vector> = pe_basis(n).flatten_all();
        let span = crate::linalg::Subspace::span(&vectors, d * d).unwrap();
        // Build the constraint rows over gl coordinates.
        let mut rows = Vec::new();
        let idx = |a: usize, b: usize| a * d + b;
        for a in 0..n {
            for b in 0..n {
                // D_{ba} + A_{ab} = 0
                let mut r = Vector::zero();
                r.add_term(idx(a, b), &Scalar::one());
                r.add_term(idx(n + b, n + a), &Scalar::one());
                rows.push(r);
                // B symmetric / C antisymmetric
                if a < b {
                    let mut r = Vector::zero();
                    r.add_term(idx(a, n + b), &Scalar::one());
                    r.add_term(idx(b, n + a), &Scalar::from_int(-1));
                    rows.push(r);
                    let mut r = Vector::zero();
                    r.add_term(idx(n + a, b), &Scalar::one());
                    r.add_term(idx(n + b, a), &Scalar::one());
                    rows.push(r);
                }
                if a == b {
                    let mut r = Vector::zero();
                    r.add_term(idx(n + a, a), &Scalar::one());
                    rows.push(r);
                }
            }
        }
        let kernel = structure::kernel_of_rows(&rows, d * d).unwrap();
        let kernel_span = crate::linalg::Subspace::span(&kernel, d * d).unwrap();
        assert_eq!(kernel_span.dim(), span.dim());
        for v in span.basis() {
            assert!(kernel_span.contains(v));
        }
    }
}
