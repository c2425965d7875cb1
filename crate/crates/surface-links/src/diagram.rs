//! Dart-based combinatorial maps of 4-valent diagrams on closed oriented surfaces.
//!
//! A diagram with `n` crossings has `4n` darts, one per edge-end. Dart
//! `4c + s` sits at crossing `c` in slot `s`, the slots numbered 0..3
//! counterclockwise around the crossing as seen from the positive side of
//! the surface. Slots 0 and 2 carry the overstrand, slots 1 and 3 the
//! understrand. The edge set is a fixed-point-free involution on darts.
//! Crossingless link components ("free loops") are tracked by count; each
//! lives on its own sphere piece with two faces.

use crate::{Error, Result};
use std::collections::VecDeque;

/// Index of a dart: `4 * crossing + slot`.
pub type DartId = usize;

/// A dart as a (crossing, slot) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn id(self) -> DartId {
        4 * self.crossing + self.slot as usize
    }
    pub fn from_id(d: DartId) -> Self {
        Dart { crossing: d / 4, slot: (d % 4) as u8 }
    }
}

/// Rotate a dart one slot counterclockwise within its crossing.
pub fn rot(d: DartId) -> DartId {
    4 * (d / 4) + (d + 1) % 4
}

/// Opposite slot at the same crossing (strand continuation).
pub fn rot2(d: DartId) -> DartId {
    4 * (d / 4) + (d + 2) % 4
}

/// Rotate one slot clockwise.
pub fn rot3(d: DartId) -> DartId {
    4 * (d / 4) + (d + 3) % 4
}

/// The face decomposition of a map: each face is a dart cycle of the face
/// permutation, plus a count of dartless faces contributed by free loops.
/// `coloring[f]` (when present) 2-colors the dart-cycle faces so that faces
/// adjacent across an edge get opposite colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    pub faces: Vec<Vec<DartId>>,
    pub free_faces: usize,
    pub coloring: Option<Vec<u8>>,
}

impl FaceStructure {
    /// Total face count, free-loop faces included.
    pub fn num_faces(&self) -> usize {
        self.faces.len() + self.free_faces
    }

    /// Face index containing a dart.
    pub fn face_of(&self, d: DartId) -> usize {
        self.faces
            .iter()
            .position(|f| f.contains(&d))
            .expect("dart not in any face")
    }

    /// The two color classes as sorted lists of face indices.
    pub fn color_classes(&self) -> Option<[Vec<usize>; 2]> {
        let col = self.coloring.as_ref()?;
        let mut classes = [Vec::new(), Vec::new()];
        for (f, &c) in col.iter().enumerate() {
            classes[c as usize].push(f);
        }
        Some(classes)
    }
}

/// A link diagram cellularly embedded in the closed oriented surface spanned
/// by its rotation system, with optional component orientations and an
/// optional declared ambient genus (for non-cellular embeddings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombMap {
    n: usize,
    m: Vec<DartId>,
    free_loops: usize,
    orientation: Option<Vec<bool>>,
    declared_genus: Option<usize>,
}

impl CombMap {
    /// Build a map from an edge list. Every dart `0..4n` must occur exactly
    /// once; an edge may not match a dart with itself.
    pub fn new(n: usize, edges: &[(DartId, DartId)], free_loops: usize) -> Result<Self> {
        let nd = 4 * n;
        if edges.len() * 2 != nd {
            return Err(Error::Structural(format!(
                "expected {} edges for {} crossings, got {}",
                nd / 2,
                n,
                edges.len()
            )));
        }
        let mut m = vec![usize::MAX; nd];
        for &(a, b) in edges {
            if a >= nd || b >= nd {
                return Err(Error::Structural(format!("dart out of range: ({a},{b})")));
            }
            if a == b {
                return Err(Error::Structural(format!("edge matches dart {a} with itself")));
            }
            if m[a] != usize::MAX || m[b] != usize::MAX {
                return Err(Error::Structural(format!("dart matched twice in edge ({a},{b})")));
            }
            m[a] = b;
            m[b] = a;
        }
        Ok(CombMap { n, m, free_loops, orientation: None, declared_genus: None })
    }

    /// Build a map directly from a dart matching.
    pub fn from_matching(n: usize, m: Vec<DartId>, free_loops: usize) -> Result<Self> {
        let map = CombMap { n, m, free_loops, orientation: None, declared_genus: None };
        map.validate()?;
        Ok(map)
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        CombMap { n: 0, m: Vec::new(), free_loops: 0, orientation: None, declared_genus: None }
    }

    /// Crossingless diagram of `k` trivial components.
    pub fn trivial(k: usize) -> Self {
        CombMap { n: 0, m: Vec::new(), free_loops: k, orientation: None, declared_genus: None }
    }

    pub fn n_crossings(&self) -> usize {
        self.n
    }
    pub fn n_darts(&self) -> usize {
        4 * self.n
    }
    pub fn n_edges(&self) -> usize {
        2 * self.n
    }
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Add crossingless components.
    pub fn with_free_loops(mut self, k: usize) -> Self {
        self.free_loops = k;
        self
    }

    /// The dart matched with `d` by the edge involution.
    pub fn m(&self, d: DartId) -> DartId {
        self.m[d]
    }

    /// Edge list in canonical order: pairs `(d, m(d))` with `d < m(d)`.
    pub fn edges(&self) -> Vec<(DartId, DartId)> {
        (0..self.n_darts()).filter(|&d| d < self.m[d]).map(|d| (d, self.m[d])).collect()
    }

    /// Next entry dart along the strand: continue through the crossing and
    /// follow the edge.
    pub fn next(&self, d: DartId) -> DartId {
        self.m[rot2(d)]
    }

    /// Previous entry dart along the strand.
    pub fn prev(&self, d: DartId) -> DartId {
        rot2(self.m[d])
    }

    /// Declared ambient genus (>= rotation genus) for non-cellular
    /// embeddings; `None` means the rotation surface itself.
    pub fn declared_genus(&self) -> Option<usize> {
        self.declared_genus
    }

    /// Declare the ambient genus.
    pub fn with_declared_genus(mut self, g: usize) -> Result<Self> {
        let rg = self.genus()?;
        if g < rg {
            return Err(Error::Structural(format!(
                "declared genus {g} below rotation genus {rg}"
            )));
        }
        self.declared_genus = Some(g);
        Ok(self)
    }

    /// Strand-traversal orbits of entry darts; each link component through
    /// crossings yields two (one per direction).
    pub fn strand_orbits(&self) -> Vec<Vec<DartId>> {
        let mut seen = vec![false; self.n_darts()];
        let mut orbits = Vec::new();
        for d0 in 0..self.n_darts() {
            if seen[d0] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = d0;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = self.next(d);
                if d == d0 {
                    break;
                }
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// One traversal per component through crossings: the oriented one when
    /// orientation is present, else the direction containing the least dart.
    pub fn components(&self) -> Vec<Vec<DartId>> {
        let orbits = self.strand_orbits();
        orbits
            .into_iter()
            .filter(|o| {
                let d0 = o[0];
                match &self.orientation {
                    Some(fw) => fw[d0],
                    None => {
                        // keep the direction whose orbit contains the least dart
                        // of the pair (orbit vs its reverse rot2-image)
                        let min_here = *o.iter().min().unwrap();
                        let min_rev = o.iter().map(|&d| rot2(d)).min().unwrap();
                        min_here < min_rev
                    }
                }
            })
            .collect()
    }

    /// Number of link components, free loops included.
    pub fn num_components(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// True when component orientations are present.
    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// True when `d` is an entry dart of a forward traversal.
    pub fn forward(&self, d: DartId) -> Result<bool> {
        self.orientation.as_ref().map(|fw| fw[d]).ok_or(Error::MissingOrientation)
    }

    pub(crate) fn orientation_vec(&self) -> Option<&Vec<bool>> {
        self.orientation.as_ref()
    }

    /// Orient components by declaring one forward entry dart per component;
    /// every component through crossings must receive exactly one seed.
    pub fn orient(mut self, seeds: &[DartId]) -> Result<Self> {
        let mut fw = vec![false; self.n_darts()];
        for &s in seeds {
            if s >= self.n_darts() {
                return Err(Error::Structural(format!("orientation dart {s} out of range")));
            }
            if fw[s] {
                return Err(Error::Structural(format!("duplicate orientation seed for dart {s}")));
            }
            let mut d = s;
            loop {
                fw[d] = true;
                d = self.next(d);
                if d == s {
                    break;
                }
            }
        }
        // the reverse of the traversal through d is the traversal through
        // rot2(d); exactly one direction of each component must be marked
        for d in 0..self.n_darts() {
            if fw[d] == fw[rot2(d)] {
                return Err(Error::Structural(
                    "orientation seeds must cover each component in one direction".into(),
                ));
            }
        }
        self.orientation = Some(fw);
        Ok(self)
    }

    /// Orient every component in the direction of its least entry dart.
    pub fn orient_default(self) -> Result<Self> {
        let seeds: Vec<DartId> = self.components().iter().map(|o| o[0]).collect();
        self.orient(&seeds)
    }

    /// Forget orientations.
    pub fn forget_orientation(mut self) -> Self {
        self.orientation = None;
        self
    }

    pub(crate) fn set_orientation_unchecked(&mut self, fw: Vec<bool>) {
        self.orientation = Some(fw);
    }

    /// Full validation of the structural invariants.
    pub fn validate(&self) -> Result<()> {
        let nd = self.n_darts();
        if self.m.len() != nd {
            return Err(Error::Structural("matching length mismatch".into()));
        }
        for d in 0..nd {
            if self.m[d] >= nd {
                return Err(Error::Structural(format!("dart {d} matched out of range")));
            }
            if self.m[d] == d {
                return Err(Error::Structural(format!("dart {d} matched with itself")));
            }
            if self.m[self.m[d]] != d {
                return Err(Error::Structural(format!("matching not involutive at {d}")));
            }
        }
        if let Some(fw) = &self.orientation {
            if fw.len() != nd {
                return Err(Error::Structural("orientation length mismatch".into()));
            }
            for d in 0..nd {
                if fw[self.next(d)] != fw[d] {
                    return Err(Error::Structural("orientation not constant on traversal".into()));
                }
                if fw[d] == fw[rot2(d)] {
                    return Err(Error::Structural("orientation marks both directions".into()));
                }
            }
        }
        if let Some(g) = self.declared_genus {
            if g < self.genus()? {
                return Err(Error::Structural("declared genus below rotation genus".into()));
            }
        }
        Ok(())
    }

    /// Face orbits of the permutation `d -> rot(m(d))`, deterministically
    /// ordered by least dart; free loops contribute two dartless faces each.
    pub fn faces(&self) -> FaceStructure {
        let nd = self.n_darts();
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for d0 in 0..nd {
            if seen[d0] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = d0;
            loop {
                seen[d] = true;
                cyc.push(d);
                d = rot(self.m[d]);
                if d == d0 {
                    break;
                }
            }
            faces.push(cyc);
        }
        FaceStructure { faces, free_faces: 2 * self.free_loops, coloring: None }
    }

    /// Map each dart to its face index (indices as in `faces()`).
    pub fn face_index(&self) -> (FaceStructure, Vec<usize>) {
        let fs = self.faces();
        let mut idx = vec![usize::MAX; self.n_darts()];
        for (i, f) in fs.faces.iter().enumerate() {
            for &d in f {
                idx[d] = i;
            }
        }
        (fs, idx)
    }

    /// Face index of the corner between slots `k` and `k+1` at crossing `c`.
    /// Corner `(c,k)` is swept by the face walk turning at dart `m(4c+k)`'s
    /// crossing, i.e. it lies in the face containing dart `m(4c+k)`.
    pub fn corner_face(&self, c: usize, k: u8, face_of: &[usize]) -> usize {
        face_of[self.m[4 * c + k as usize]]
    }

    /// Connected pieces of the crossing graph (crossings joined by edges).
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for c0 in 0..self.n {
            if seen[c0] {
                continue;
            }
            let mut piece = Vec::new();
            let mut q = VecDeque::from([c0]);
            seen[c0] = true;
            while let Some(c) = q.pop_front() {
                piece.push(c);
                for s in 0..4 {
                    let c2 = self.m[4 * c + s] / 4;
                    if !seen[c2] {
                        seen[c2] = true;
                        q.push_back(c2);
                    }
                }
            }
            piece.sort_unstable();
            out.push(piece);
        }
        out
    }

    /// Genus of the rotation surface. Disconnected diagrams live on the
    /// disjoint union of their pieces' surfaces; the genera add.
    pub fn genus(&self) -> Result<usize> {
        let (fs, face_of) = self.face_index();
        let _ = &fs;
        let mut total = 0usize;
        for piece in self.pieces() {
            let v = piece.len();
            let e = 2 * v;
            let mut pf: Vec<usize> =
                piece.iter().flat_map(|&c| &face_of[4 * c..4 * c + 4]).copied().collect();
            pf.sort_unstable();
            pf.dedup();
            let f = pf.len();
            let chi = (v + f) as i64 - e as i64;
            if (2 - chi) % 2 != 0 || chi > 2 {
                return Err(Error::Structural(format!("piece has bad euler characteristic {chi}")));
            }
            total += ((2 - chi) / 2) as usize;
        }
        Ok(total)
    }

    /// (V, E, F) of the whole map, free-loop faces included.
    pub fn euler_data(&self) -> (usize, usize, usize) {
        (self.n, 2 * self.n, self.faces().num_faces())
    }

    /// True iff along every traversal the passes alternate over/under.
    pub fn is_alternating(&self) -> bool {
        for orbit in self.strand_orbits() {
            for (i, &d) in orbit.iter().enumerate() {
                let nxt = orbit[(i + 1) % orbit.len()];
                if d % 2 == nxt % 2 {
                    return false;
                }
            }
        }
        true
    }

    /// 2-color the faces so that colors alternate across every edge.
    pub fn checkerboard_coloring(&self) -> Result<FaceStructure> {
        let (mut fs, face_of) = self.face_index();
        let nf = fs.faces.len();
        let mut col = vec![u8::MAX; nf];
        for f0 in 0..nf {
            if col[f0] != u8::MAX {
                continue;
            }
            col[f0] = 0;
            let mut q = VecDeque::from([f0]);
            while let Some(f) = q.pop_front() {
                for &d in &fs.faces[f] {
                    let g = face_of[self.m[d]];
                    if col[g] == u8::MAX {
                        col[g] = 1 - col[f];
                        q.push_back(g);
                    } else if col[g] == col[f] {
                        return Err(Error::NotColorable);
                    }
                }
            }
        }
        fs.coloring = Some(col);
        Ok(fs)
    }

    /// Sign of crossing `c` (orientation required): +1 when the forward
    /// under-entry slot follows the forward over-entry slot counterclockwise.
    pub fn crossing_sign(&self, c: usize) -> Result<i8> {
        let fw = self.orientation.as_ref().ok_or(Error::MissingOrientation)?;
        let o = if fw[4 * c] { 0 } else { 2 };
        let u = if fw[4 * c + 1] { 1 } else { 3 };
        Ok(if u == (o + 1) % 4 { 1 } else { -1 })
    }

    /// Writhe: sum of crossing signs.
    pub fn writhe(&self) -> Result<i64> {
        (0..self.n).map(|c| self.crossing_sign(c).map(|s| s as i64)).sum()
    }

    /// Switch every crossing (rotate every slot one step counterclockwise);
    /// same surface, mirrored link.
    pub fn mirror(&self) -> Self {
        self.conjugate(|d| rot(d))
    }

    /// Reverse the surface orientation (reflect slot order at every crossing,
    /// keeping over/under).
    pub fn reflect(&self) -> Self {
        self.conjugate(|d| 4 * (d / 4) + (4 - d % 4) % 4)
    }

    fn conjugate(&self, f: impl Fn(DartId) -> DartId) -> Self {
        let nd = self.n_darts();
        let mut m = vec![0; nd];
        for d in 0..nd {
            m[f(d)] = f(self.m[d]);
        }
        let orientation = self.orientation.as_ref().map(|fw| {
            let mut v = vec![false; nd];
            for d in 0..nd {
                v[f(d)] = fw[d];
            }
            v
        });
        CombMap {
            n: self.n,
            m,
            free_loops: self.free_loops,
            orientation,
            declared_genus: self.declared_genus,
        }
    }

    /// Relabel crossings by `perm` (new id of old crossing `c` is `perm[c]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        self.conjugate(|d| 4 * perm[d / 4] + d % 4)
    }

    /// Standard planar pretzel diagram: vertical twist regions of the given
    /// sizes side by side, closed off left to right. All crossings have the
    /// same local writhe, so the diagram is fully alternating.
    pub fn pretzel(twists: &[usize]) -> Result<Self> {
        if twists.is_empty() || twists.contains(&0) {
            return Err(Error::Structural("pretzel twist regions must be nonempty".into()));
        }
        let mut edges = Vec::new();
        let mut first = Vec::new();
        let mut last = Vec::new();
        let mut id = 0;
        for &t in twists {
            first.push(id);
            for c in id..id + t - 1 {
                edges.push((4 * c + 2, 4 * (c + 1) + 1));
                edges.push((4 * c + 3, 4 * (c + 1)));
            }
            last.push(id + t - 1);
            id += t;
        }
        let k = twists.len();
        for i in 0..k {
            let j = (i + 1) % k;
            edges.push((4 * first[i], 4 * first[j] + 1));
            edges.push((4 * last[i] + 3, 4 * last[j] + 2));
        }
        CombMap::new(id, &edges, 0)
    }
}
