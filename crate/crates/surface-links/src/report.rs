//! Assembled analysis reports: genus, alternation, checkerboard form data,
//! the signature-genus and slope identities, and structural classification.

use crate::diagram::CombMap;
use crate::gauss::{gauss_to_surface, GaussCode};
use crate::gl::{goeritz, is_definite, sigma_invariant, spine, Color, Definiteness, GoeritzForm};
use crate::structure::{classify, StructureReport};
use crate::Result;
use num_rational::BigRational;
use serde::Serialize;
use std::fmt::Write;

/// Goeritz data of one checkerboard surface.
#[derive(Debug, Clone, Serialize)]
pub struct ColorReport {
    pub beta1: usize,
    pub sigma: i64,
    pub slope: i64,
    pub definite: &'static str,
}

/// A value attached to each checkerboard color.
#[derive(Debug, Clone, Serialize)]
pub struct ColorPair<T> {
    #[serde(rename = "B")]
    pub black: T,
    #[serde(rename = "W")]
    pub white: T,
}

/// Identity verdicts; `None` when the hypotheses do not apply (the map is
/// not fully alternating and cellular, or, for the slope identity, a
/// checkerboard is disconnected).
#[derive(Debug, Clone, Serialize)]
pub struct Identities {
    pub signature_genus_identity: Option<bool>,
    pub slope_identity: Option<bool>,
}

/// Everything `analyze` knows about one diagram. Serializes to the wire
/// schema `{crossings, genus, alternating, colorable, colors: {B, W},
/// sigma_invariants, identities, structure}`; color data is `null` on
/// non-colorable diagrams, and every number is exact.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub crossings: usize,
    pub genus: usize,
    pub alternating: bool,
    pub colorable: bool,
    pub colors: Option<ColorPair<ColorReport>>,
    pub sigma_invariants: Option<ColorPair<String>>,
    pub identities: Identities,
    pub structure: StructureReport,
}

fn definiteness_name(d: Definiteness) -> &'static str {
    match d {
        Definiteness::Positive => "positive",
        Definiteness::Negative => "negative",
        Definiteness::Indefinite => "indefinite",
        Definiteness::Zero => "zero",
    }
}

fn color_report(f: &GoeritzForm) -> ColorReport {
    ColorReport {
        beta1: f.beta1,
        sigma: f.sigma,
        slope: f.slope,
        definite: definiteness_name(is_definite(f)),
    }
}

/// Analyze one diagram on its rotation surface.
pub fn analyze(map: &CombMap) -> Result<AnalysisReport> {
    map.validate()?;
    let structure = classify(map)?;
    let genus = map.genus()?;
    let alternating = map.is_alternating();
    let colorable = map.checkerboard_coloring().is_ok();
    let mut colors = None;
    let mut sigma_invariants = None;
    let mut identities = Identities { signature_genus_identity: None, slope_identity: None };
    if colorable {
        let b = goeritz(map, Color::Black)?;
        let w = goeritz(map, Color::White)?;
        let sb = sigma_invariant(map, Color::Black)?;
        let sw = sigma_invariant(map, Color::White)?;
        // the identities are statements about fully alternating cellular
        // diagrams; elsewhere they are not expected to hold
        let applicable = alternating && structure.cellular && structure.connected;
        let g = genus as i64;
        if applicable {
            identities.signature_genus_identity =
                Some(&sb - &sw == BigRational::from_integer((2 * g).into()));
            let connected_boards = spine(map, Color::Black)?.components == 1
                && spine(map, Color::White)?.components == 1;
            if connected_boards {
                identities.slope_identity =
                    Some(b.slope - w.slope == 2 * (b.beta1 as i64 + w.beta1 as i64 - 2 * g));
            }
        }
        sigma_invariants = Some(ColorPair { black: sb.to_string(), white: sw.to_string() });
        colors = Some(ColorPair { black: color_report(&b), white: color_report(&w) });
    }
    Ok(AnalysisReport {
        crossings: map.n_crossings(),
        genus,
        alternating,
        colorable,
        colors,
        sigma_invariants,
        identities,
        structure,
    })
}

/// Analyze the cellular realization of a Gauss code.
pub fn analyze_gauss(code: &GaussCode) -> Result<AnalysisReport> {
    analyze(&gauss_to_surface(code)?)
}

impl AnalysisReport {
    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| writeln!(s, "{k:<24} {v}").unwrap();
        line("crossings", self.crossings.to_string());
        line("genus", self.genus.to_string());
        line("alternating", self.alternating.to_string());
        line("colorable", self.colorable.to_string());
        if let Some(c) = &self.colors {
            for (name, r) in [("color B", &c.black), ("color W", &c.white)] {
                line(
                    name,
                    format!("beta1 {}  sigma {}  slope {}  {}", r.beta1, r.sigma, r.slope, r.definite),
                );
            }
        }
        if let Some(si) = &self.sigma_invariants {
            line("sigma invariants", format!("B {}  W {}", si.black, si.white));
        }
        let verdict = |o: Option<bool>| match o {
            None => "n/a".to_string(),
            Some(true) => "holds".to_string(),
            Some(false) => "violated".to_string(),
        };
        line("signature-genus identity", verdict(self.identities.signature_genus_identity));
        line("slope identity", verdict(self.identities.slope_identity));
        line(
            "structure",
            format!(
                "connected {}  cellular {}  weakly prime {}  prime {}",
                self.structure.connected,
                self.structure.cellular,
                self.structure.weakly_prime,
                self.structure.prime
            ),
        );
        if !self.structure.removable_nugatory.is_empty() {
            line("removable nugatory", format!("{:?}", self.structure.removable_nugatory));
        }
        s
    }
}
