//! Text, JSON and LaTeX renderings of graded characters and Γ sets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::krchar::GradedChar;
use crate::poset::{GammaSet, MultiDegree};
use crate::rootsys::{LieType, RootSysError, Weight};

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("entry {index}: {reason}")]
    BadEntry { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub weight: Vec<i32>,
    pub degree: Vec<i32>,
    pub mult: i64,
}

/// `{"algebra": "D5", "ell": 2, "entries": [...]}` with entries in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharDoc {
    pub algebra: String,
    pub ell: usize,
    pub entries: Vec<EntryDoc>,
}

impl GradedCharDoc {
    pub fn new(t: LieType, g: &GradedChar) -> Self {
        let entries = g
            .sorted_entries()
            .into_iter()
            .map(|(w, r, m)| EntryDoc { weight: w.0, degree: r.0, mult: m })
            .collect();
        GradedCharDoc { algebra: t.to_string(), ell: g.ell(), entries }
    }

    pub fn to_graded(&self) -> Result<(LieType, GradedChar), OutputError> {
        let t: LieType = self.algebra.parse()?;
        let mut g = GradedChar::new(self.ell);
        for (index, e) in self.entries.iter().enumerate() {
            if e.weight.len() != t.rank {
                return Err(OutputError::BadEntry { index, reason: format!("weight has length {}", e.weight.len()) });
            }
            if e.degree.len() != self.ell {
                return Err(OutputError::BadEntry { index, reason: format!("degree has length {}", e.degree.len()) });
            }
            g.add_term(Weight(e.weight.clone()), MultiDegree(e.degree.clone()), e.mult);
        }
        Ok((t, g))
    }
}

pub fn graded_to_json(t: LieType, g: &GradedChar) -> String {
    serde_json::to_string_pretty(&GradedCharDoc::new(t, g)).expect("plain data serializes")
}

pub fn graded_from_json(s: &str) -> Result<(LieType, GradedChar), OutputError> {
    serde_json::from_str::<GradedCharDoc>(s)?.to_graded()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaPointDoc {
    pub weight: Vec<i32>,
    pub degree: Vec<i32>,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDoc {
    pub algebra: String,
    pub ell: usize,
    pub base: EntryDoc,
    pub psi: Vec<Vec<i32>>,
    pub points: Vec<GammaPointDoc>,
}

impl GammaDoc {
    pub fn new(t: LieType, gamma: &GammaSet) -> Self {
        let base = gamma.base();
        GammaDoc {
            algebra: t.to_string(),
            ell: gamma.ell(),
            base: EntryDoc { weight: base.weight.0.clone(), degree: base.degree.0.clone(), mult: 1 },
            psi: gamma.psi().elements().iter().map(|w| w.0.clone()).collect(),
            points: gamma
                .points()
                .iter()
                .map(|p| GammaPointDoc {
                    weight: p.weight.0.clone(),
                    degree: p.degree.0.clone(),
                    d: gamma.d_of(&p.weight).expect("every point has a distance"),
                })
                .collect(),
        }
    }
}

pub fn gamma_to_json(t: LieType, gamma: &GammaSet) -> String {
    serde_json::to_string_pretty(&GammaDoc::new(t, gamma)).expect("plain data serializes")
}

pub fn gamma_from_json(s: &str) -> Result<GammaDoc, OutputError> {
    Ok(serde_json::from_str(s)?)
}

pub fn latex_weight(w: &Weight) -> String {
    let terms: Vec<String> = w
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match c {
            1 => format!("\\omega_{}", i + 1),
            -1 => format!("-\\omega_{}", i + 1),
            _ => format!("{c}\\omega_{}", i + 1),
        })
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.join("+").replace("+-", "-")
}

fn latex_monomial(r: &MultiDegree) -> String {
    r.0.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(j, &e)| if e == 1 { format!("t_{}", j + 1) } else { format!("t_{}^{{{e}}}", j + 1) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `\ch V(\omega_1+\omega_3)\, t_1^{2} t_2 + …`.
pub fn graded_to_latex(g: &GradedChar) -> String {
    if g.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, r, m)) in g.sorted_entries().into_iter().enumerate() {
        let sep = match (i, m < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sep);
        if m.abs() != 1 {
            out.push_str(&format!("{}\\,", m.abs()));
        }
        out.push_str(&format!("\\ch V({})", latex_weight(&w)));
        let mono = latex_monomial(&r);
        if !mono.is_empty() {
            out.push_str("\\, ");
            out.push_str(&mono);
        }
    }
    out
}

/// One line per entry: `mult  V(weight)  t^degree`.
pub fn graded_to_plain(g: &GradedChar) -> String {
    g.sorted_entries()
        .into_iter()
        .map(|(w, r, m)| format!("{m}\tV{w}\tt^{r}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn gamma_to_plain(gamma: &GammaSet) -> String {
    let mut lines = vec![format!(
        "Γ above {} with Ψ = {{{}}}: {} points",
        gamma.base(),
        gamma.psi().elements().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", "),
        gamma.len()
    )];
    for p in gamma.points() {
        lines.push(format!("d={}\t{}", gamma.d_of(&p.weight).unwrap_or(0), p));
    }
    lines.join("\n")
}
