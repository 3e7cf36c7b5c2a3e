//! The structure-constant JSON interchange schema used by every module
//! and the CLI: basis labels with parities, sparse bracket tables, Gram
//! matrices, and the optional grading block for band-limited algebras.
//! Serialization is canonical (sorted keys, fixed field order), so
//! import → export is byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::{BilinearForm, Grading, LieSuperAlgebra};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::space::{Parity, SuperSpace, Vector};

#[derive(Serialize, Deserialize)]
struct BasisEntry {
    label: String,
    parity: u8,
}

#[derive(Serialize, Deserialize)]
struct BracketTerm {
    k: usize,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    terms: Vec<BracketTerm>,
}

#[derive(Serialize, Deserialize)]
struct FormEntry {
    name: String,
    parity: u8,
    gram: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
struct GradingEntry {
    degrees: Vec<i64>,
    window: (i64, i64),
    escaped: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    basis: Vec<BasisEntry>,
    brackets: Vec<BracketEntry>,
    forms: Vec<FormEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    grading: Option<GradingEntry>,
}

/// Serializes an algebra with its forms to the canonical JSON text.
pub fn export_algebra(g: &LieSuperAlgebra, forms: &[&BilinearForm]) -> String {
    let basis = (0..g.dim())
        .map(|i| BasisEntry {
            label: g.space().label(i).to_string(),
            parity: g.space().parity(i).as_u8(),
        })
        .collect();
    let brackets = g
        .bracket_entries()
        .into_iter()
        .map(|((i, j), v)| BracketEntry {
            i,
            j,
            terms: v
                .iter()
                .map(|(k, c)| BracketTerm { k, coeff: c.clone() })
                .collect(),
        })
        .collect();
    let forms = forms
        .iter()
        .map(|f| FormEntry {
            name: f.name.clone(),
            parity: f.parity.as_u8(),
            gram: (0..f.dim())
                .map(|r| (0..f.dim()).map(|c| f.entry(r, c).clone()).collect())
                .collect(),
        })
        .collect();
    let grading = g.grading().map(|gr| GradingEntry {
        degrees: gr.degrees.clone(),
        window: gr.window,
        escaped: g.escaped_pairs(),
    });
    let file = AlgebraFile {
        name: g.name().to_string(),
        basis,
        brackets,
        forms,
        grading,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    text.push('\n');
    text
}

/// Parses the interchange format back into an algebra and its forms.
pub fn import_algebra(text: &str) -> Result<(LieSuperAlgebra, Vec<BilinearForm>), Error> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let labels: Vec<String> = file.basis.iter().map(|b| b.label.clone()).collect();
    let parities: Vec<Parity> = file
        .basis
        .iter()
        .map(|b| Parity::from_usize(b.parity as usize))
        .collect();
    let space = SuperSpace::new(labels, parities)?;
    let dim = space.dim();
    let mut brackets = BTreeMap::new();
    for e in &file.brackets {
        if e.i >= dim || e.j >= dim || e.terms.iter().any(|t| t.k >= dim) {
            return Err(Error::DimensionMismatch(
                "bracket index outside the basis".into(),
            ));
        }
        let v = Vector::from_terms(e.terms.iter().map(|t| (t.k, t.coeff.clone())));
        brackets.insert((e.i, e.j), v);
    }
    let algebra = match &file.grading {
        None => LieSuperAlgebra::new(file.name.clone(), space, brackets),
        Some(gr) => LieSuperAlgebra::new_truncated(
            file.name.clone(),
            space,
            brackets,
            gr.escaped.iter().copied(),
            Grading {
                degrees: gr.degrees.clone(),
                window: gr.window,
            },
        ),
    };
    let mut forms = Vec::new();
    for f in &file.forms {
        if f.gram.len() != dim || f.gram.iter().any(|row| row.len() != dim) {
            return Err(Error::DimensionMismatch("Gram matrix shape".into()));
        }
        let gram = Mat::from_rows(f.gram.clone());
        forms.push(BilinearForm::new(
            f.name.clone(),
            Parity::from_usize(f.parity as usize),
            gram,
        ));
    }
    Ok((algebra, forms))
}

/// Convenience used by tests: a vector rendered as sparse JSON terms.
pub fn vector_terms_json(v: &Vector) -> Vec<(usize, Scalar)> {
    v.iter().map(|(i, c)| (i, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::build_k_truncated;
    use crate::matrices::build_gl;

    #[test]
    fn roundtrip_is_byte_identical() {
        let (g, f) = build_gl(2, 1);
        let text = export_algebra(&g, &[&f]);
        let (g2, forms) = import_algebra(&text).unwrap();
        let text2 = export_algebra(&g2, &forms.iter().collect::<Vec<_>>());
        assert_eq!(text, text2);
        assert_eq!(g2.dim(), g.dim());
        assert!(g2.check_super_jacobi().passed());
    }

    #[test]
    fn truncated_roundtrip_keeps_grading_and_escapes() {
        let (g, _, _) = build_k_truncated(2, 1).unwrap();
        let text = export_algebra(&g, &[]);
        let (g2, _) = import_algebra(&text).unwrap();
        assert_eq!(g2.escaped_pairs(), g.escaped_pairs());
        assert_eq!(g2.grading(), g.grading());
        let text2 = export_algebra(&g2, &[]);
        assert_eq!(text, text2);
    }

    #[test]
    fn bad_indices_rejected() {
        let text = r#"{"name":"x","basis":[{"label":"a","parity":0}],
            "brackets":[{"i":0,"j":5,"terms":[]}],"forms":[]}"#;
        assert!(import_algebra(text).is_err());
    }
}
