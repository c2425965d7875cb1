//! JSON serialization of diagrams.
//!
//! ```json
//! {"crossings":[{"id":0},{"id":1}],
//!  "edges":[[[0,0],[1,3]], ...],
//!  "orientation":[[0,0],[0,1], ...],
//!  "free_loops":1,
//!  "declared_genus":2}
//! ```
//!
//! Crossing ids may be arbitrary distinct integers; they are normalized to
//! positions in the `crossings` array. `orientation` lists the forward
//! darts as `[id, slot]` pairs and is optional, as are `free_loops`
//! (default 0) and `declared_genus`. Emission is canonical: ids `0..n`,
//! edges sorted with the smaller dart first, orientation sorted.

use crate::diagram::{CombMap, Dart};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    crossings: Vec<CrossingJson>,
    edges: Vec<((u64, u8), (u64, u8))>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientation: Option<Vec<(u64, u8)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    free_loops: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    declared_genus: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct CrossingJson {
    id: u64,
}

/// Canonical compact JSON of a map.
pub fn diagram_to_json(map: &CombMap) -> String {
    let pair = |d: usize| (Dart::from_id(d).crossing as u64, Dart::from_id(d).slot);
    let doc = DiagramJson {
        crossings: (0..map.n_crossings() as u64).map(|id| CrossingJson { id }).collect(),
        edges: map.edges().iter().map(|&(a, b)| (pair(a), pair(b))).collect(),
        orientation: map.orientation_vec().map(|fw| {
            (0..map.n_darts()).filter(|&d| fw[d]).map(pair).collect()
        }),
        free_loops: Some(map.free_loops()).filter(|&f| f > 0),
        declared_genus: map.declared_genus(),
    };
    serde_json::to_string(&doc).expect("diagram serialization cannot fail")
}

/// Parse and validate a diagram from JSON.
pub fn diagram_from_json(text: &str) -> Result<CombMap> {
    let doc: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad diagram JSON: {e}")))?;
    let mut index = BTreeMap::new();
    for (i, c) in doc.crossings.iter().enumerate() {
        if index.insert(c.id, i).is_some() {
            return Err(Error::Parse(format!("duplicate crossing id {}", c.id)));
        }
    }
    let dart = |(id, slot): (u64, u8)| -> Result<usize> {
        let &c = index
            .get(&id)
            .ok_or_else(|| Error::Parse(format!("edge references unknown crossing {id}")))?;
        if slot > 3 {
            return Err(Error::Parse(format!("slot {slot} out of range on crossing {id}")));
        }
        Ok(Dart { crossing: c, slot }.id())
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    for &(a, b) in &doc.edges {
        edges.push((dart(a)?, dart(b)?));
    }
    let mut map = CombMap::new(index.len(), &edges, doc.free_loops.unwrap_or(0))?;
    if let Some(fwd) = doc.orientation {
        let mut fw = vec![false; map.n_darts()];
        for &p in &fwd {
            fw[dart(p)?] = true;
        }
        map.set_orientation_unchecked(fw);
    }
    if let Some(g) = doc.declared_genus {
        map = map.with_declared_genus(g)?;
    }
    map.validate()?;
    Ok(map)
}
