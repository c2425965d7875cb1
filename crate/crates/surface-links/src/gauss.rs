//! Gauss codes: signed over/under double-occurrence sequences.
//!
//! Grammar: `code := component ("/" component)*`, tokens
//! `("O"|"U") digits ("+"|"-")` separated by whitespace or commas. A lone
//! `*` denotes a crossingless component (free loop). Every label occurs
//! exactly twice, once `O` and once `U`, with equal signs.
//!
//! `gauss_to_surface` caps the abstract diagram of a code with disks: the
//! over pass enters slot 0, the under pass enters slot 1 for sign `+` and
//! slot 3 for sign `-`; consecutive exits and entries are joined by edges.
//! The resulting map is cellular on its rotation surface.

use crate::diagram::CombMap;
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;

/// One pass through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token {
    pub over: bool,
    pub label: u64,
    pub sign: i8,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            if self.over { 'O' } else { 'U' },
            self.label,
            if self.sign > 0 { '+' } else { '-' }
        )
    }
}

/// A validated Gauss code; empty token lists are crossingless components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub components: Vec<Vec<Token>>,
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "*".to_string()
                } else {
                    c.iter().map(Token::to_string).join(" ")
                }
            })
            .collect();
        write!(f, "{}", comps.join(" / "))
    }
}

/// Parse and validate a Gauss code. The empty string is the empty code.
pub fn parse_gauss(text: &str) -> Result<GaussCode> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(GaussCode { components: Vec::new() });
    }
    let mut components = Vec::new();
    for seg in t.split('/') {
        let seg = seg.trim();
        if seg == "*" {
            components.push(Vec::new());
            continue;
        }
        if seg.is_empty() {
            return Err(Error::Parse("empty component (use * for a free loop)".into()));
        }
        let mut comp = Vec::new();
        for word in seg.split(|c: char| c.is_whitespace() || c == ',').filter(|w| !w.is_empty()) {
            comp.push(parse_token(word)?);
        }
        components.push(comp);
    }
    let code = GaussCode { components };
    code.validate()?;
    Ok(code)
}

fn parse_token(w: &str) -> Result<Token> {
    let mut chars = w.chars();
    let over = match chars.next() {
        Some('O') => true,
        Some('U') => false,
        _ => return Err(Error::Parse(format!("token `{w}` must start with O or U"))),
    };
    let body: String = chars.collect();
    let sign = match body.chars().last() {
        Some('+') => 1,
        Some('-') => -1,
        _ => return Err(Error::Parse(format!("token `{w}` must end with + or -"))),
    };
    let digits = &body[..body.len() - 1];
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("token `{w}` has a malformed label")));
    }
    let label =
        digits.parse().map_err(|_| Error::Parse(format!("label out of range in `{w}`")))?;
    Ok(Token { over, label, sign })
}

impl GaussCode {
    /// Check the double-occurrence invariants.
    pub fn validate(&self) -> Result<()> {
        let mut seen: BTreeMap<u64, Vec<Token>> = BTreeMap::new();
        for t in self.components.iter().flatten() {
            seen.entry(t.label).or_default().push(*t);
        }
        for (label, occ) in seen {
            if occ.len() != 2 {
                return Err(Error::Parse(format!(
                    "label {label} occurs {} times, expected 2",
                    occ.len()
                )));
            }
            if occ[0].over == occ[1].over {
                return Err(Error::Parse(format!(
                    "label {label} must occur once over and once under"
                )));
            }
            if occ[0].sign != occ[1].sign {
                return Err(Error::Parse(format!("label {label} occurs with both signs")));
            }
        }
        Ok(())
    }

    /// Number of crossings.
    pub fn n_crossings(&self) -> usize {
        self.components.iter().flatten().count() / 2
    }

    /// Labels in first-appearance order.
    pub fn labels(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for t in self.components.iter().flatten() {
            if !out.contains(&t.label) {
                out.push(t.label);
            }
        }
        out
    }

    /// Read the code of a map's strand traversal (orients by default when
    /// the map is unoriented). Labels are crossing ids plus one.
    pub fn of_map(map: &CombMap) -> Result<GaussCode> {
        let m;
        let map = if map.is_oriented() {
            map
        } else {
            m = map.clone().orient_default()?;
            &m
        };
        let mut components = Vec::new();
        for orbit in map.components() {
            let mut comp = Vec::new();
            for &d in &orbit {
                let (c, s) = (d / 4, d % 4);
                comp.push(Token {
                    over: s % 2 == 0,
                    label: c as u64 + 1,
                    sign: map.crossing_sign(c)?,
                });
            }
            components.push(comp);
        }
        components.extend(std::iter::repeat(Vec::new()).take(map.free_loops()));
        let code = GaussCode { components };
        code.validate()?;
        Ok(code)
    }
}

/// Build the cellular surface diagram of a code. Crossings are numbered by
/// first label appearance; the map is oriented along the code's traversal.
pub fn gauss_to_surface(code: &GaussCode) -> Result<CombMap> {
    code.validate()?;
    let labels = code.labels();
    let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let n = labels.len();
    let mut edges = Vec::with_capacity(2 * n);
    let mut seeds = Vec::new();
    let mut free_loops = 0;
    for comp in &code.components {
        if comp.is_empty() {
            free_loops += 1;
            continue;
        }
        let entry_exit: Vec<(usize, usize)> = comp
            .iter()
            .map(|t| {
                let c = index[&t.label];
                if t.over {
                    (4 * c, 4 * c + 2)
                } else if t.sign > 0 {
                    (4 * c + 1, 4 * c + 3)
                } else {
                    (4 * c + 3, 4 * c + 1)
                }
            })
            .collect();
        for (i, &(_, exit)) in entry_exit.iter().enumerate() {
            let (entry_next, _) = entry_exit[(i + 1) % entry_exit.len()];
            edges.push((exit, entry_next));
        }
        seeds.push(entry_exit[0].0);
    }
    CombMap::new(n, &edges, free_loops)?.orient(&seeds)
}

/// Canonical byte string of a code: invariant under crossing relabeling,
/// per-component rotation and component reordering (not under reversal).
pub fn canonical_gauss(code: &GaussCode) -> Vec<u8> {
    let nonempty: Vec<&Vec<Token>> =
        code.components.iter().filter(|c| !c.is_empty()).collect();
    let n_free = code.components.len() - nonempty.len();
    let k = nonempty.len();
    let mut best: Option<Vec<u8>> = None;
    let mut rots = vec![0usize; k];
    for perm in (0..k).permutations(k) {
        loop {
            // serialize under this arrangement with labels renamed by
            // first appearance
            let mut rename: BTreeMap<u64, u32> = BTreeMap::new();
            let mut bytes = Vec::new();
            for (pi, &ci) in perm.iter().enumerate() {
                let comp = nonempty[ci];
                let len = comp.len();
                for j in 0..len {
                    let t = comp[(rots[pi] + j) % len];
                    let next = rename.len() as u32;
                    let id = *rename.entry(t.label).or_insert(next);
                    bytes.push(t.over as u8);
                    bytes.extend(id.to_be_bytes());
                    bytes.push((t.sign > 0) as u8);
                }
                bytes.push(0xFF);
            }
            if best.as_ref().map_or(true, |b| bytes < *b) {
                best = Some(bytes);
            }
            // advance the rotation odometer
            let mut i = 0;
            while i < k {
                rots[i] += 1;
                if rots[i] < nonempty[perm[i]].len() {
                    break;
                }
                rots[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    let mut out = b"GC1".to_vec();
    out.extend((n_free as u32).to_be_bytes());
    out.extend(best.unwrap_or_default());
    out
}

/// Splice component `site_b.0` of `b` (starting at token `site_b.1`) into
/// component `site_a.0` of `a` before token `site_a.1`; `b`'s labels are
/// shifted past `a`'s and its other components are appended.
pub fn connect_sum(
    a: &GaussCode,
    b: &GaussCode,
    site_a: (usize, usize),
    site_b: (usize, usize),
) -> Result<GaussCode> {
    a.validate()?;
    b.validate()?;
    let (ca, pa) = site_a;
    let (cb, pb) = site_b;
    let comp_a = a.components.get(ca).ok_or_else(|| {
        Error::InvalidSite(format!("component {ca} out of range"))
    })?;
    let comp_b = b.components.get(cb).ok_or_else(|| {
        Error::InvalidSite(format!("component {cb} out of range"))
    })?;
    if pa > comp_a.len() || pb > comp_b.len() {
        return Err(Error::InvalidSite("splice position out of range".into()));
    }
    let shift = a.labels().iter().max().copied().unwrap_or(0);
    let lift = |t: &Token| Token { label: t.label + shift, ..*t };
    let mut comps = Vec::new();
    for (i, comp) in a.components.iter().enumerate() {
        if i != ca {
            comps.push(comp.clone());
            continue;
        }
        let mut merged = Vec::with_capacity(comp.len() + comp_b.len());
        merged.extend_from_slice(&comp[..pa]);
        for j in 0..comp_b.len() {
            merged.push(lift(&comp_b[(pb + j) % comp_b.len()]));
        }
        merged.extend_from_slice(&comp[pa..]);
        comps.push(merged);
    }
    for (i, comp) in b.components.iter().enumerate() {
        if i != cb {
            comps.push(comp.iter().map(lift).collect());
        }
    }
    let out = GaussCode { components: comps };
    out.validate()?;
    Ok(out)
}
