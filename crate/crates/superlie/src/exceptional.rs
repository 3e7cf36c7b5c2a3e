//! The exceptional 32|32 split of po(0|6).
//!
//! po(0|6) decomposes as a ⊕ a* where a is spanned by the constants, the
//! linear and quadratic monomials, and one chiral half of the 20
//! cubics, while a* is generated by the other chiral half together with
//! the top monomial. The chiral halves are the eigenspaces of the
//! duality involution on cubics (complement inside the top monomial
//! composed with the ξ↔η swap); they are the two 10-dimensional
//! irreducible summands of the quadratic action on cubics.
//!
//! Everything here works in split coordinates ξ1ξ2ξ3η1η2η3. The
//! documented change of basis to the self-paired θ generators is pinned
//! in `split_generator`; its top monomials agree exactly (unit Jacobian),
//! so residue normalizations transfer with no factor.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grassmann::{poisson_bracket, GrassmannElement, Mask};
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use crate::space::Vector;

/// Number of split generators.
pub const LETTERS: usize = 6;

/// Split generator `letter` (1..3 = ξ1..ξ3, 4..6 = η1..η3) as a θ
/// element: ξ_j = θ_j + i·θ_{j+3}, η_j = (i·θ_j + θ_{j+3})/2. Under the
/// Poisson bracket {ξ_i, η_j} = -i·δ_ij and {ξ,ξ} = {η,η} = 0, and
/// ξ1ξ2ξ3η1η2η3 = θ1···θ6 on the nose.
pub fn split_generator(letter: usize) -> GrassmannElement {
    assert!((1..=LETTERS).contains(&letter));
    let n = 6;
    if letter <= 3 {
        let j = letter;
        let mut xi = GrassmannElement::theta(n, j);
        xi.add_scaled(&GrassmannElement::theta(n, j + 3), &Scalar::i());
        xi
    } else {
        let j = letter - 3;
        let mut eta = GrassmannElement::theta(n, j).scaled(&Scalar::gaussian(0, 1, 1, 2));
        eta.add_scaled(
            &GrassmannElement::theta(n, j + 3),
            &Scalar::rational(1, 2),
        );
        eta
    }
}

/// Product of split generators for a sorted index list, as a θ element.
pub fn split_monomial(indices: &[usize]) -> GrassmannElement {
    let mut out = GrassmannElement::one(6);
    for &ix in indices {
        out = out.wedge(&split_generator(ix));
    }
    out
}

fn subsets_of_size(k: u32) -> Vec<Mask> {
    (0..(1u32 << LETTERS))
        .filter(|m| m.count_ones() == k)
        .collect()
}

fn mask_indices(mask: Mask) -> Vec<usize> {
    (0..LETTERS).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

/// Sign of merging two disjoint sorted letter sets.
fn merge_sign(s: Mask, t: Mask) -> i64 {
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let low = rest.trailing_zeros();
        inversions += (t & ((1 << low) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// ξ_j ↔ η_j swap on a letter mask, with the re-sorting sign.
fn swap_xi_eta(mask: Mask) -> (Mask, i64) {
    let letters: Vec<usize> = (0..LETTERS).filter(|i| mask & (1 << i) != 0).collect();
    let image: Vec<usize> = letters.iter().map(|&l| (l + 3) % 6).collect();
    let mut inversions = 0;
    for a in 0..image.len() {
        for b in (a + 1)..image.len() {
            if image[a] > image[b] {
                inversions += 1;
            }
        }
    }
    let out = image.iter().fold(0u32, |m, &l| m | (1 << l));
    (out, if inversions % 2 == 0 { 1 } else { -1 })
}

/// A linear combination of split monomials, the file-level currency.
pub type SplitCombo = Vec<(Vec<usize>, Scalar)>;

/// The two chiral halves of the cubic component, as combinations of
/// split cubic monomials: the first half contains ξ1ξ2ξ3, the second
/// η1η2η3. Derived as eigenspaces of the duality involution
/// `T(m) = (ξ↔η swap, then signed complement in the top)`.
pub fn chiral_cubic_halves() -> (Vec<SplitCombo>, Vec<SplitCombo>) {
    let cubics = subsets_of_size(3);
    let index_of = |m: Mask| cubics.iter().position(|&c| c == m).expect("cubic mask");
    let full: Mask = (1 << LETTERS) - 1;

    // T as a signed permutation on the 20 cubics.
    let mut t = Mat::zeros(cubics.len(), cubics.len());
    for (col, &m) in cubics.iter().enumerate() {
        let (swapped, s1) = swap_xi_eta(m);
        let complement = full & !swapped;
        let s2 = merge_sign(swapped, complement);
        t.set(index_of(complement), col, Scalar::from_int(s1 * s2));
    }

    let eigenspace = |lambda: &Scalar| -> Vec<Vector> {
        let mut m = t.clone();
        for i in 0..cubics.len() {
            let v = m.at(i, i) - lambda;
            m.set(i, i, v);
        }
        m.kernel()
    };
    let xi_top = index_of(0b000111); // ξ1ξ2ξ3
    let eta_top = index_of(0b111000); // η1η2η3
    let lambda_xi = t.at(xi_top, xi_top).clone();
    let lambda_eta = t.at(eta_top, eta_top).clone();
    assert!(
        !lambda_xi.is_zero() && !lambda_eta.is_zero() && lambda_xi != lambda_eta,
        "the chiral tops must be fixed by T with opposite signs"
    );
    let to_combo = |v: &Vector| -> SplitCombo {
        v.iter()
            .map(|(i, c)| (mask_indices(cubics[i]), c.clone()))
            .collect()
    };
    let xi_half: Vec<SplitCombo> = eigenspace(&lambda_xi).iter().map(&to_combo).collect();
    let eta_half: Vec<SplitCombo> = eigenspace(&lambda_eta).iter().map(&to_combo).collect();
    assert_eq!(xi_half.len(), 10, "chiral half must be 10-dimensional");
    assert_eq!(eta_half.len(), 10, "chiral half must be 10-dimensional");
    (xi_half, eta_half)
}

/// A combination of split monomials as a θ element.
pub fn combo_to_theta(combo: &SplitCombo) -> GrassmannElement {
    let mut out = GrassmannElement::zero(6);
    for (indices, coeff) in combo {
        out.add_scaled(&split_monomial(indices), coeff);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct FileTerm {
    indices: Vec<usize>,
    coeff: Scalar,
}

/// On-disk basis data for the exceptional split: a's spanning set and
/// the generators of a*, as split-monomial combinations.
#[derive(Serialize, Deserialize)]
pub struct BasisFile {
    pub provenance: String,
    /// Label order of the indices 1..6.
    pub labels: Vec<String>,
    a_span: Vec<Vec<FileTerm>>,
    a_star_generators: Vec<Vec<FileTerm>>,
}

pub struct LoadedBasis {
    pub provenance: String,
    pub a_span: Vec<GrassmannElement>,
    pub a_star_generators: Vec<GrassmannElement>,
}

/// The candidate file shipped with the crate.
pub fn shipped_basis_file() -> &'static str {
    include_str!("../data/exceptional_po6_basis.json")
}

pub fn parse_basis_file(text: &str) -> Result<LoadedBasis, Error> {
    let file: BasisFile = serde_json::from_str(text)?;
    let expected = ["xi1", "xi2", "xi3", "eta1", "eta2", "eta3"];
    if file.labels != expected {
        return Err(Error::InvalidParameters(format!(
            "basis file labels must be {expected:?}"
        )));
    }
    let convert = |rows: &[Vec<FileTerm>]| -> Result<Vec<GrassmannElement>, Error> {
        rows.iter()
            .map(|terms| {
                let mut e = GrassmannElement::zero(6);
                for t in terms {
                    if t.indices.iter().any(|&i| i == 0 || i > 6) {
                        return Err(Error::InvalidParameters(
                            "basis file index out of range 1..6".into(),
                        ));
                    }
                    let combo: SplitCombo = vec![(t.indices.clone(), t.coeff.clone())];
                    e.add_scaled(&combo_to_theta(&combo), &Scalar::one());
                }
                Ok(e)
            })
            .collect()
    };
    Ok(LoadedBasis {
        provenance: file.provenance,
        a_span: convert(&file.a_span)?,
        a_star_generators: convert(&file.a_star_generators)?,
    })
}

/// Serializes the derived candidate data; used to regenerate the shipped
/// file and by the self-check test.
pub fn render_basis_file() -> String {
    let (xi_half, eta_half) = chiral_cubic_halves();
    let combo_terms = |combo: &SplitCombo| -> Vec<FileTerm> {
        combo
            .iter()
            .map(|(indices, coeff)| FileTerm {
                indices: indices.clone(),
                coeff: coeff.clone(),
            })
            .collect()
    };
    let mut a_span: Vec<Vec<FileTerm>> = Vec::new();
    a_span.push(vec![FileTerm {
        indices: vec![],
        coeff: Scalar::one(),
    }]);
    for k in 1..=2u32 {
        for mask in subsets_of_size(k) {
            a_span.push(vec![FileTerm {
                indices: mask_indices(mask),
                coeff: Scalar::one(),
            }]);
        }
    }
    for combo in &xi_half {
        a_span.push(combo_terms(combo));
    }
    let mut a_star_generators: Vec<Vec<FileTerm>> = Vec::new();
    for combo in &eta_half {
        a_star_generators.push(combo_terms(combo));
    }
    a_star_generators.push(vec![FileTerm {
        indices: vec![1, 2, 3, 4, 5, 6],
        coeff: Scalar::one(),
    }]);
    let file = BasisFile {
        provenance: "computed candidate: chiral eigen-halves of the cubic duality involution; \
                     machine-verified for all triple axioms, not yet checked against an \
                     external source"
            .to_string(),
        labels: ["xi1", "xi2", "xi3", "eta1", "eta2", "eta3"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        a_span,
        a_star_generators,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    text.push('\n');
    text
}
