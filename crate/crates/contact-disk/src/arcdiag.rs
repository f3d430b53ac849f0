//! Arc diagrams, their surfaces and the algebra presentations they carry.
//!
//! An arc diagram is an ordered collection of oriented segments, marked
//! points on the segments, and a two-to-one matching pairing the points.
//! Thickening the segments and attaching an oriented 1-handle at each
//! matched pair builds a surface; its boundary is traced combinatorially
//! here, which yields the Euler characteristic, the number of boundary
//! components and the genus.
//!
//! Three families are built in: the zig-zag parameterizations of the marked
//! disk, the planar diagrams for a sphere with `n` boundary components, and
//! the symplectic-basis diagrams for a genus-`g` surface with one boundary
//! component. These are the families with quiver presentations.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArcError {
    #[error("degenerate diagram: surgery closes a loop through handles {0:?}")]
    Degenerate(Vec<usize>),
    #[error("no presentation is defined for this diagram")]
    UnsupportedFamily,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An arc diagram: ordered oriented segments, ordered points, and a perfect
/// matching on the points (the handles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    /// Point names in global order (by segment, then position).
    points: Vec<String>,
    /// Point ids per segment, in orientation order.
    segments: Vec<Vec<usize>>,
    /// Matched pairs of point ids, `(first, second)` in global order; the
    /// pair index is the 0-based handle id.
    pairs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn new(
        segments: Vec<Vec<String>>,
        matches: &[(String, String)],
    ) -> Result<Self, ArcError> {
        let mut points = Vec::new();
        let mut index = HashMap::new();
        let mut seg_ids = Vec::new();
        for seg in &segments {
            let mut ids = Vec::new();
            for name in seg {
                if index.contains_key(name) {
                    return Err(ArcError::Parse(format!("duplicate point {name}")));
                }
                index.insert(name.clone(), points.len());
                ids.push(points.len());
                points.push(name.clone());
            }
            seg_ids.push(ids);
        }
        let mut used = vec![false; points.len()];
        let mut pairs = Vec::new();
        for (a, b) in matches {
            let &ia = index
                .get(a)
                .ok_or_else(|| ArcError::Parse(format!("unknown point {a}")))?;
            let &ib = index
                .get(b)
                .ok_or_else(|| ArcError::Parse(format!("unknown point {b}")))?;
            if ia == ib || used[ia] || used[ib] {
                return Err(ArcError::Parse(format!("bad match {a} {b}")));
            }
            used[ia] = true;
            used[ib] = true;
            pairs.push((ia.min(ib), ia.max(ib)));
        }
        if used.iter().any(|&u| !u) {
            return Err(ArcError::Parse("unmatched point".into()));
        }
        Ok(ArcDiagram {
            points,
            segments: seg_ids,
            pairs,
        })
    }

    /// Number of segments.
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Number of handles.
    pub fn handle_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn point_name(&self, id: usize) -> &str {
        &self.points[id]
    }

    fn partner(&self, p: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        unreachable!("every point is matched")
    }

    /// Non-degeneracy: 0-surgery on every matched pair leaves no closed
    /// component. Each point is cut into a left and a right end; surgery on
    /// `{x, y}` joins left-of-x to right-of-y and left-of-y to right-of-x.
    pub fn validate(&self) -> Result<(), ArcError> {
        // Node encoding: for point p, left end = 2p, right end = 2p + 1.
        // Segment ends are extra degree-one nodes and need no explicit id:
        // we only look for components consisting entirely of degree-two
        // nodes.
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut edge_handles: HashMap<(usize, usize), usize> = HashMap::new();
        let add = |a: Option<usize>, b: Option<usize>, adj: &mut HashMap<usize, Vec<usize>>| {
            if let (Some(a), Some(b)) = (a, b) {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            } else if let Some(a) = a.or(b) {
                // A segment end: mark with a self-degree bump so the node is
                // recognized as boundary-touching.
                adj.entry(a).or_default();
            }
        };
        for seg in &self.segments {
            // Within a segment: start end .. L(p1), R(p1)..L(p2), ...
            if seg.is_empty() {
                continue;
            }
            add(None, Some(2 * seg[0]), &mut adj);
            for w in seg.windows(2) {
                add(Some(2 * w[0] + 1), Some(2 * w[1]), &mut adj);
            }
            add(Some(2 * seg[seg.len() - 1] + 1), None, &mut adj);
        }
        let mut boundary_nodes: Vec<usize> = Vec::new();
        for seg in &self.segments {
            if seg.is_empty() {
                continue;
            }
            boundary_nodes.push(2 * seg[0]);
            boundary_nodes.push(2 * seg[seg.len() - 1] + 1);
        }
        for (h, &(x, y)) in self.pairs.iter().enumerate() {
            let e1 = (2 * x, 2 * y + 1);
            let e2 = (2 * y, 2 * x + 1);
            adj.entry(e1.0).or_default().push(e1.1);
            adj.entry(e1.1).or_default().push(e1.0);
            adj.entry(e2.0).or_default().push(e2.1);
            adj.entry(e2.1).or_default().push(e2.0);
            edge_handles.insert((e1.0.min(e1.1), e1.0.max(e1.1)), h);
            edge_handles.insert((e2.0.min(e2.1), e2.0.max(e2.1)), h);
        }
        // A closed component is one whose nodes all have degree two.
        let mut seen: HashMap<usize, bool> = HashMap::new();
        let mut offending = Vec::new();
        for &start in adj.keys() {
            if seen.contains_key(&start) {
                continue;
            }
            let mut component = vec![start];
            let mut stack = vec![start];
            seen.insert(start, true);
            while let Some(v) = stack.pop() {
                for &w in adj.get(&v).into_iter().flatten() {
                    if !seen.contains_key(&w) {
                        seen.insert(w, true);
                        component.push(w);
                        stack.push(w);
                    }
                }
            }
            let closed = component
                .iter()
                .all(|v| adj.get(v).map_or(0, Vec::len) == 2 && !boundary_nodes.contains(v));
            if closed {
                for v in &component {
                    for w in adj.get(v).into_iter().flatten() {
                        if let Some(&h) = edge_handles.get(&(*v.min(w), *v.max(w))) {
                            if !offending.contains(&h) {
                                offending.push(h);
                            }
                        }
                    }
                }
            }
        }
        if offending.is_empty() {
            Ok(())
        } else {
            offending.sort_unstable();
            Err(ArcError::Degenerate(offending))
        }
    }

    /// Traces the boundary of the thickened surface. Returns one vector per
    /// boundary component, holding the marked points (as `(segment, end)`
    /// with end 0 for the start of the segment, 1 for its end) in traversal
    /// order.
    fn boundary_cycles(&self) -> Vec<Vec<(usize, usize)>> {
        // Directed boundary atoms, in the orientation where each segment's
        // handle side is traversed in point order:
        //   Bottom(i, j): piece of segment i after its j-th point slot
        //   Side(i, e):   the segment end crossing marked point (i, e)
        //   Top(i):       the far side of segment i
        // At a slot the walk jumps along the handle rail: arriving at the
        // left end of the slot at x continues from the right end of the slot
        // at its partner.
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
        enum Atom {
            Bottom(usize, usize),
            End(usize),
            Top(usize),
            Start(usize),
        }
        let pos: HashMap<usize, (usize, usize)> = self
            .segments
            .iter()
            .enumerate()
            .flat_map(|(i, seg)| {
                seg.iter()
                    .enumerate()
                    .map(move |(j, &p)| (p, (i, j)))
                    .collect::<Vec<_>>()
            })
            .collect();
        let succ = |a: Atom| -> Atom {
            match a {
                Atom::Bottom(i, j) => {
                    if j < self.segments[i].len() {
                        // Arrive at the slot of point seg[j]; ride the rail.
                        let p = self.segments[i][j];
                        let q = self.partner(p);
                        let (qi, qj) = pos[&q];
                        Atom::Bottom(qi, qj + 1)
                    } else {
                        Atom::End(i)
                    }
                }
                Atom::End(i) => Atom::Top(i),
                Atom::Top(i) => Atom::Start(i),
                Atom::Start(i) => Atom::Bottom(i, 0),
            }
        };
        let mut cycles = Vec::new();
        let mut seen: Vec<Atom> = Vec::new();
        for i in 0..self.segments.len() {
            let start = Atom::Start(i);
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            loop {
                seen.push(a);
                match a {
                    Atom::Start(s) => cycle.push((s, 0)),
                    Atom::End(s) => cycle.push((s, 1)),
                    _ => {}
                }
                a = succ(a);
                if a == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn surface_invariants(&self) -> SurfaceInvariants {
        let cycles = self.boundary_cycles();
        let l = self.segment_count() as i64;
        let k = self.handle_count() as i64;
        let euler_char = l - k;
        let boundary_components = cycles.len();
        let genus = (2 - euler_char - boundary_components as i64) / 2;
        assert!(genus >= 0, "boundary trace inconsistent with Euler count");
        SurfaceInvariants {
            euler_char,
            boundary_components,
            genus: genus as usize,
            marked_points: 2 * self.segment_count(),
        }
    }

    /// Marked points of the single boundary circle, in traversal order.
    /// Only meaningful for diagrams whose surface is a disk.
    pub fn boundary_marked_points(&self) -> Vec<(usize, usize)> {
        let cycles = self.boundary_cycles();
        assert_eq!(cycles.len(), 1, "surface has several boundary components");
        cycles.into_iter().next().unwrap()
    }

    /// All handle subsets tagged with the Euler number of the elementary
    /// dividing set they bound: the positive region is the thickened
    /// segments plus the chosen handles.
    pub fn elementary_subsets(&self) -> Vec<(Vec<usize>, i64)> {
        let l = self.segment_count() as i64;
        let k = self.handle_count();
        let chi_surface = l - k as i64;
        let mut out = Vec::new();
        for mask in 0u64..1 << k {
            let subset: Vec<usize> = (0..k).filter(|h| mask >> h & 1 == 1).collect();
            let chi_positive = l - subset.len() as i64;
            // The dividing set has one arc per segment, so its Euler
            // characteristic is l; the two regions glue along it.
            let chi_negative = chi_surface - chi_positive + l;
            out.push((subset, chi_positive - chi_negative));
        }
        out
    }

    // -- text format ---------------------------------------------------

    /// One line per segment (`Z1: a1 b1 a1'`), then one `match` line per
    /// handle.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, seg) in self.segments.iter().enumerate() {
            let names: Vec<&str> = seg.iter().map(|&p| self.points[p].as_str()).collect();
            s.push_str(&format!("Z{}: {}\n", i + 1, names.join(" ")));
        }
        for &(a, b) in &self.pairs {
            s.push_str(&format!("match {} {}\n", self.points[a], self.points[b]));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, ArcError> {
        let mut segments: Vec<Vec<String>> = Vec::new();
        let mut matches: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("match ") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(ArcError::Parse(format!("bad match line: {line}")));
                }
                matches.push((toks[0].to_string(), toks[1].to_string()));
            } else if let Some((head, rest)) = line.split_once(':') {
                let head = head.trim();
                if !head.starts_with('Z') || head[1..].parse::<usize>().is_err() {
                    return Err(ArcError::Parse(format!("bad segment head: {head}")));
                }
                let expect = segments.len() + 1;
                if head[1..].parse::<usize>() != Ok(expect) {
                    return Err(ArcError::Parse(format!(
                        "segments must appear in order; expected Z{expect}"
                    )));
                }
                segments.push(rest.split_whitespace().map(str::to_string).collect());
            } else {
                return Err(ArcError::Parse(format!("unrecognized line: {line}")));
            }
        }
        if segments.is_empty() {
            return Err(ArcError::Parse("no segments".into()));
        }
        Self::new(segments, &matches)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: usize,
    pub marked_points: usize,
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

fn a(k: usize) -> String {
    format!("a{k}")
}
fn ap(k: usize) -> String {
    format!("a{k}'")
}
fn b(k: usize) -> String {
    format!("b{k}")
}
fn bp(k: usize) -> String {
    format!("b{k}'")
}

/// The zig-zag parameterization of the disk with `2n` marked points:
/// `n` segments and `n - 1` handles `{a_k, a_k'}`, laid out so that segment
/// `1` carries `a_1`, even segments carry `a'` points and odd segments carry
/// `a` points, two per interior segment.
pub fn zigzag(n: usize) -> Result<ArcDiagram, ArcError> {
    if n < 2 {
        return Err(ArcError::BadParameter(format!("zigzag needs n >= 2, got {n}")));
    }
    let mut segments: Vec<Vec<String>> = vec![vec![a(1)]];
    for i in 2..=n {
        let mut seg = Vec::new();
        if i % 2 == 0 {
            seg.push(ap(i - 1));
            if i < n {
                seg.push(ap(i));
            }
        } else {
            seg.push(a(i - 1));
            if i < n {
                seg.push(a(i));
            }
        }
        segments.push(seg);
    }
    let matches: Vec<(String, String)> = (1..n).map(|k| (a(k), ap(k))).collect();
    let d = ArcDiagram::new(segments, &matches)?;
    d.validate()?;
    Ok(d)
}

/// The planar parameterization of the sphere with `n` boundary components:
/// one long segment carrying `a_k b_k a_k'` triples and one extra segment
/// per puncture carrying `b_k'`.
pub fn punctured_sphere(n: usize) -> Result<ArcDiagram, ArcError> {
    if n < 2 {
        return Err(ArcError::BadParameter(format!(
            "punctured sphere needs n >= 2, got {n}"
        )));
    }
    let mut first = Vec::new();
    for k in 1..n {
        first.push(a(k));
        first.push(b(k));
        first.push(ap(k));
    }
    let mut segments = vec![first];
    for k in 1..n {
        segments.push(vec![bp(k)]);
    }
    let mut matches = Vec::new();
    for k in 1..n {
        matches.push((a(k), ap(k)));
        matches.push((b(k), bp(k)));
    }
    let d = ArcDiagram::new(segments, &matches)?;
    d.validate()?;
    Ok(d)
}

/// The symplectic-basis parameterization of the genus-`g` surface with one
/// boundary component: a single segment carrying `a_k b_k a_k' b_k'` blocks.
pub fn genus_surface(g: usize) -> Result<ArcDiagram, ArcError> {
    if g < 1 {
        return Err(ArcError::BadParameter(format!(
            "genus surface needs g >= 1, got {g}"
        )));
    }
    let mut seg = Vec::new();
    for k in 1..=g {
        seg.push(a(k));
        seg.push(b(k));
        seg.push(ap(k));
        seg.push(bp(k));
    }
    let mut matches = Vec::new();
    for k in 1..=g {
        matches.push((a(k), ap(k)));
        matches.push((b(k), bp(k)));
    }
    let d = ArcDiagram::new(vec![seg], &matches)?;
    d.validate()?;
    Ok(d)
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

/// A quiver presentation: named objects and arrows plus monomial-zero and
/// commuting-square relations. Paths list arrow indices in source-to-target
/// order (the first arrow is applied first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub objects: Vec<String>,
    pub arrows: Vec<PresArrow>,
    pub relations: Vec<PresRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresRelation {
    /// The composite of the listed arrows is zero.
    Zero(Vec<usize>),
    /// Two parallel composites agree.
    Commute(Vec<usize>, Vec<usize>),
}

impl QuiverPresentation {
    /// Checks that every relation is made of composable arrows and, for
    /// commuting relations, that both sides are parallel.
    pub fn type_check(&self) -> Result<(), ArcError> {
        let path_ends = |path: &[usize]| -> Result<(usize, usize), ArcError> {
            if path.is_empty() {
                return Err(ArcError::Parse("empty path in relation".into()));
            }
            let mut cur = self.arrows[path[0]].src;
            for &e in path {
                let arr = self
                    .arrows
                    .get(e)
                    .ok_or_else(|| ArcError::Parse(format!("arrow index {e} out of range")))?;
                if arr.src != cur {
                    return Err(ArcError::Parse(format!(
                        "relation path breaks at arrow {}",
                        arr.name
                    )));
                }
                cur = arr.tgt;
            }
            Ok((self.arrows[path[0]].src, cur))
        };
        for rel in &self.relations {
            match rel {
                PresRelation::Zero(p) => {
                    path_ends(p)?;
                }
                PresRelation::Commute(p, q) => {
                    if path_ends(p)? != path_ends(q)? {
                        return Err(ArcError::Parse("commuting sides are not parallel".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "objects": self.objects,
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "name": a.name,
                "src": self.objects[a.src],
                "tgt": self.objects[a.tgt],
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| match r {
                PresRelation::Zero(p) => serde_json::json!({
                    "zero": p.iter().map(|&e| self.arrows[e].name.clone()).collect::<Vec<_>>()
                }),
                PresRelation::Commute(p, q) => serde_json::json!({
                    "equal": [
                        p.iter().map(|&e| self.arrows[e].name.clone()).collect::<Vec<_>>(),
                        q.iter().map(|&e| self.arrows[e].name.clone()).collect::<Vec<_>>(),
                    ]
                }),
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph presentation {\n  rankdir=LR;\n");
        for (i, o) in self.objects.iter().enumerate() {
            s.push_str(&format!("  o{i} [label=\"{o}\"];\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  o{} -> o{} [label=\"{}\"];\n",
                a.src, a.tgt, a.name
            ));
        }
        s.push_str("}\n");
        s
    }

    /// Plain-text exchange format, in the same spirit as the arc-diagram
    /// one: an object list, one `arrow` line each, and `zero` / `equal`
    /// relation lines naming arrows in application order.
    pub fn to_text(&self) -> String {
        let mut s = format!("objects: {}\n", self.objects.join(" "));
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name, self.objects[a.src], self.objects[a.tgt]
            ));
        }
        let name = |p: &[usize]| {
            p.iter()
                .map(|&e| self.arrows[e].name.clone())
                .collect::<Vec<_>>()
                .join(" ")
        };
        for r in &self.relations {
            match r {
                PresRelation::Zero(p) => s.push_str(&format!("zero: {}\n", name(p))),
                PresRelation::Commute(p, q) => {
                    s.push_str(&format!("equal: {} == {}\n", name(p), name(q)))
                }
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, ArcError> {
        let mut objects: Vec<String> = Vec::new();
        let mut arrows: Vec<PresArrow> = Vec::new();
        let mut relations = Vec::new();
        let object_index = |objects: &[String], name: &str| -> Result<usize, ArcError> {
            objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| ArcError::Parse(format!("unknown object {name}")))
        };
        let arrow_path = |arrows: &[PresArrow], names: &str| -> Result<Vec<usize>, ArcError> {
            names
                .split_whitespace()
                .map(|n| {
                    arrows
                        .iter()
                        .position(|a| a.name == n)
                        .ok_or_else(|| ArcError::Parse(format!("unknown arrow {n}")))
                })
                .collect()
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("objects:") {
                if !objects.is_empty() {
                    return Err(ArcError::Parse("duplicate object list".into()));
                }
                objects = rest.split_whitespace().map(str::to_string).collect();
                let unique: std::collections::HashSet<&String> = objects.iter().collect();
                if objects.is_empty() || unique.len() != objects.len() {
                    return Err(ArcError::Parse("bad object list".into()));
                }
            } else if let Some(rest) = line.strip_prefix("arrow ") {
                let (name, sig) = rest
                    .split_once(':')
                    .ok_or_else(|| ArcError::Parse(format!("bad arrow line: {line}")))?;
                let (src, tgt) = sig
                    .split_once("->")
                    .ok_or_else(|| ArcError::Parse(format!("bad arrow line: {line}")))?;
                let name = name.trim().to_string();
                if name.is_empty() || arrows.iter().any(|a| a.name == name) {
                    return Err(ArcError::Parse(format!("bad arrow name {name:?}")));
                }
                arrows.push(PresArrow {
                    name,
                    src: object_index(&objects, src.trim())?,
                    tgt: object_index(&objects, tgt.trim())?,
                });
            } else if let Some(rest) = line.strip_prefix("zero:") {
                relations.push(PresRelation::Zero(arrow_path(&arrows, rest)?));
            } else if let Some(rest) = line.strip_prefix("equal:") {
                let (p, q) = rest
                    .split_once("==")
                    .ok_or_else(|| ArcError::Parse(format!("bad equal line: {line}")))?;
                relations.push(PresRelation::Commute(
                    arrow_path(&arrows, p)?,
                    arrow_path(&arrows, q)?,
                ));
            } else {
                return Err(ArcError::Parse(format!("unrecognized line: {line}")));
            }
        }
        if objects.is_empty() {
            return Err(ArcError::Parse("no objects".into()));
        }
        let p = QuiverPresentation {
            objects,
            arrows,
            relations,
        };
        p.type_check()?;
        Ok(p)
    }
}

/// Which built-in family a diagram belongs to, if any.
fn recognize(z: &ArcDiagram) -> Option<Family> {
    for n in 2..=z.segment_count().max(2) + 1 {
        if zigzag(n).ok().as_ref() == Some(z) {
            return Some(Family::Zigzag(n));
        }
        if punctured_sphere(n).ok().as_ref() == Some(z) {
            return Some(Family::Sphere(n));
        }
    }
    for g in 1..=z.handle_count() / 2 + 1 {
        if genus_surface(g).ok().as_ref() == Some(z) {
            return Some(Family::Genus(g));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Zigzag(usize),
    Sphere(usize),
    Genus(usize),
}

/// The quiver presentation of the algebra attached to one of the three
/// built-in families.
pub fn presentation(z: &ArcDiagram) -> Result<QuiverPresentation, ArcError> {
    match recognize(z) {
        Some(Family::Zigzag(n)) => Ok(zigzag_presentation(n)),
        Some(Family::Sphere(n)) => Ok(sphere_presentation(n)),
        Some(Family::Genus(g)) => Ok(genus_presentation(g)),
        None => Err(ArcError::UnsupportedFamily),
    }
}

fn subset_name(mask: u32, k: usize) -> String {
    if mask == 0 {
        return "{}".to_string();
    }
    let parts: Vec<String> = (1..=k)
        .filter(|h| mask >> (h - 1) & 1 == 1)
        .map(|h| format!("h{h}"))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Objects are handle subsets; one generator per basic chord and admissible
/// subset. The basic chord between handles `k` and `k + 1` runs from the
/// odd-indexed handle to the even-indexed one, and generators applied to
/// disjoint handle pairs commute.
pub fn zigzag_presentation(n: usize) -> QuiverPresentation {
    let k = n - 1;
    let objects: Vec<String> = (0u32..1 << k).map(|m| subset_name(m, k)).collect();
    // Basic chords (src handle, tgt handle), both 1-based.
    let chords: Vec<(usize, usize)> = (1..k)
        .map(|j| {
            if j % 2 == 1 {
                (j, j + 1) // odd source
            } else {
                (j + 1, j) // odd source on the other side
            }
        })
        .collect();
    let mut arrows = Vec::new();
    let mut arrow_at: HashMap<(u32, usize), usize> = HashMap::new();
    for mask in 0u32..1 << k {
        for (ci, &(s, t)) in chords.iter().enumerate() {
            let has_s = mask >> (s - 1) & 1 == 1;
            let has_t = mask >> (t - 1) & 1 == 1;
            if has_s && !has_t {
                let tgt = mask & !(1 << (s - 1)) | 1 << (t - 1);
                arrow_at.insert((mask, ci), arrows.len());
                arrows.push(PresArrow {
                    name: format!("r{s}{t}[{}]", subset_name(mask, k)),
                    src: mask as usize,
                    tgt: tgt as usize,
                });
            }
        }
    }
    // Commuting squares: two chords moving disjoint handle pairs.
    let mut relations = Vec::new();
    for mask in 0u32..1 << k {
        for ci in 0..chords.len() {
            for cj in ci + 1..chords.len() {
                let (s1, t1) = chords[ci];
                let (s2, t2) = chords[cj];
                if s1 == s2 || s1 == t2 || t1 == s2 || t1 == t2 {
                    continue;
                }
                let (Some(&e1), Some(&e2)) =
                    (arrow_at.get(&(mask, ci)), arrow_at.get(&(mask, cj)))
                else {
                    continue;
                };
                let m1 = arrows[e1].tgt as u32;
                let m2 = arrows[e2].tgt as u32;
                let (Some(&e12), Some(&e21)) =
                    (arrow_at.get(&(m1, cj)), arrow_at.get(&(m2, ci)))
                else {
                    continue;
                };
                relations.push(PresRelation::Commute(vec![e1, e12], vec![e2, e21]));
            }
        }
    }
    QuiverPresentation {
        objects,
        arrows,
        relations,
    }
}

/// Objects `I_k`, `J_k` with arrows `alpha_k : I_k -> J_k`,
/// `gamma_k : J_k -> I_k` and `nu_k : I_k -> I_{k+1}`; `alpha` after `gamma`
/// vanishes, and so do consecutive `nu`.
pub fn sphere_presentation(n: usize) -> QuiverPresentation {
    let m = n - 1;
    let mut objects = Vec::new();
    for kk in 1..=m {
        objects.push(format!("I{kk}"));
        objects.push(format!("J{kk}"));
    }
    let oi = |kk: usize| 2 * (kk - 1);
    let oj = |kk: usize| 2 * (kk - 1) + 1;
    let mut arrows = Vec::new();
    let mut alpha = HashMap::new();
    let mut gamma = HashMap::new();
    let mut nu = HashMap::new();
    for kk in 1..=m {
        alpha.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("alpha{kk}"),
            src: oi(kk),
            tgt: oj(kk),
        });
        gamma.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("gamma{kk}"),
            src: oj(kk),
            tgt: oi(kk),
        });
    }
    for kk in 1..m {
        nu.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("nu{}{}", kk, kk + 1),
            src: oi(kk),
            tgt: oi(kk + 1),
        });
    }
    let mut relations = Vec::new();
    for kk in 1..=m {
        relations.push(PresRelation::Zero(vec![gamma[&kk], alpha[&kk]]));
    }
    for kk in 1..m {
        if let (Some(&first), Some(&second)) = (nu.get(&kk), nu.get(&(kk + 1))) {
            relations.push(PresRelation::Zero(vec![first, second]));
        }
    }
    QuiverPresentation {
        objects,
        arrows,
        relations,
    }
}

/// Objects `I_k`, `J_k` with arrows `alpha_k, beta_k : I_k -> J_k`,
/// `gamma_k : J_k -> I_k` and `eta_k : J_k -> I_{k+1}`. `alpha` after
/// `gamma`, `gamma` after `beta`, `eta` after `alpha` and `beta` after `eta`
/// all vanish.
pub fn genus_presentation(g: usize) -> QuiverPresentation {
    let mut objects = Vec::new();
    for kk in 1..=g {
        objects.push(format!("I{kk}"));
        objects.push(format!("J{kk}"));
    }
    let oi = |kk: usize| 2 * (kk - 1);
    let oj = |kk: usize| 2 * (kk - 1) + 1;
    let mut arrows = Vec::new();
    let mut alpha = HashMap::new();
    let mut beta = HashMap::new();
    let mut gamma = HashMap::new();
    let mut eta = HashMap::new();
    for kk in 1..=g {
        alpha.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("alpha{kk}"),
            src: oi(kk),
            tgt: oj(kk),
        });
        beta.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("beta{kk}"),
            src: oi(kk),
            tgt: oj(kk),
        });
        gamma.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("gamma{kk}"),
            src: oj(kk),
            tgt: oi(kk),
        });
    }
    for kk in 1..g {
        eta.insert(kk, arrows.len());
        arrows.push(PresArrow {
            name: format!("eta{}{}", kk, kk + 1),
            src: oj(kk),
            tgt: oi(kk + 1),
        });
    }
    let mut relations = Vec::new();
    for kk in 1..=g {
        relations.push(PresRelation::Zero(vec![gamma[&kk], alpha[&kk]]));
        relations.push(PresRelation::Zero(vec![beta[&kk], gamma[&kk]]));
    }
    for kk in 1..g {
        relations.push(PresRelation::Zero(vec![alpha[&kk], eta[&kk]]));
        relations.push(PresRelation::Zero(vec![eta[&kk], beta[&(kk + 1)]]));
    }
    QuiverPresentation {
        objects,
        arrows,
        relations,
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_nondegenerate() {
        for n in 2..=8 {
            assert!(zigzag(n).is_ok(), "zigzag({n})");
            assert!(punctured_sphere(n).is_ok(), "sphere({n})");
        }
        for g in 1..=6 {
            assert!(genus_surface(g).is_ok(), "genus({g})");
        }
    }

    #[test]
    fn degenerate_diagram_detected() {
        // Two points on one segment matched together so that the middle
        // piece closes into a circle under surgery.
        let d = ArcDiagram::new(
            vec![vec!["x".into(), "y".into()]],
            &[("x".into(), "y".into())],
        )
        .unwrap();
        assert_eq!(d.validate(), Err(ArcError::Degenerate(vec![0])));
    }

    #[test]
    fn zigzag_surfaces_are_disks() {
        for n in 2..=8 {
            let z = zigzag(n).unwrap();
            let inv = z.surface_invariants();
            assert_eq!(inv.euler_char, 1, "n = {n}");
            assert_eq!(inv.boundary_components, 1);
            assert_eq!(inv.genus, 0);
            assert_eq!(inv.marked_points, 2 * n);
        }
    }

    #[test]
    fn zigzag_boundary_order_is_the_reversed_point_order() {
        // The trace runs against the indexing orientation: starting from the
        // start of segment 1, it visits (s1, e_n, s_n, ..., e_1).
        for n in 2..=6 {
            let z = zigzag(n).unwrap();
            let cycle = z.boundary_marked_points();
            assert_eq!(cycle.len(), 2 * n);
            let start = cycle.iter().position(|&p| p == (0, 0)).unwrap();
            let mut reversed: Vec<(usize, usize)> = vec![(0, 0)];
            for i in (1..n).rev() {
                reversed.push((i, 1));
                reversed.push((i, 0));
            }
            reversed.push((0, 1));
            let got: Vec<(usize, usize)> =
                (0..2 * n).map(|i| cycle[(start + i) % (2 * n)]).collect();
            assert_eq!(got, reversed, "n = {n}");
        }
    }

    #[test]
    fn genus_surface_invariants() {
        for g in 1..=6 {
            let z = genus_surface(g).unwrap();
            let inv = z.surface_invariants();
            assert_eq!(inv.euler_char, 1 - 2 * g as i64);
            assert_eq!(inv.boundary_components, 1);
            assert_eq!(inv.genus, g);
            assert_eq!(inv.marked_points, 2);
        }
    }

    #[test]
    fn punctured_sphere_invariants() {
        for n in 2..=8 {
            let z = punctured_sphere(n).unwrap();
            let inv = z.surface_invariants();
            assert_eq!(inv.euler_char, 2 - n as i64);
            assert_eq!(inv.boundary_components, n);
            assert_eq!(inv.genus, 0);
        }
        let z4 = punctured_sphere(4).unwrap();
        assert_eq!(z4.surface_invariants().euler_char, -2);
    }

    #[test]
    fn elementary_euler_numbers() {
        // Genus family: e = 2g - 2|C|.
        for g in 1..=4 {
            let z = genus_surface(g).unwrap();
            let subs = z.elementary_subsets();
            assert_eq!(subs.len(), 1 << (2 * g));
            for (c, e) in subs {
                assert_eq!(e, 2 * g as i64 - 2 * c.len() as i64);
            }
        }
        // The empty subset gives e = 2g.
        let z = genus_surface(3).unwrap();
        assert_eq!(z.elementary_subsets()[0], (vec![], 6));
    }

    #[test]
    fn text_round_trip() {
        for z in [zigzag(5).unwrap(), punctured_sphere(3).unwrap(), genus_surface(2).unwrap()] {
            let t = z.to_text();
            assert_eq!(ArcDiagram::from_text(&t).unwrap(), z);
        }
        assert!(ArcDiagram::from_text("Z2: a1\n").is_err());
        assert!(ArcDiagram::from_text("Z1: a1 a1\nmatch a1 a1\n").is_err());
    }

    #[test]
    fn zigzag_presentation_counts() {
        let p3 = zigzag_presentation(3);
        assert_eq!(p3.objects.len(), 4);
        assert_eq!(p3.arrows.len(), 1);
        assert_eq!(p3.arrows[0].name, "r12[{h1}]");
        assert_eq!(p3.objects[p3.arrows[0].src], "{h1}");
        assert_eq!(p3.objects[p3.arrows[0].tgt], "{h2}");

        let p4 = zigzag_presentation(4);
        assert_eq!(p4.objects.len(), 8);
        assert_eq!(p4.arrows.len(), 4);
        p4.type_check().unwrap();

        // Same arrow count as the disk quiver for all small n.
        for n in 3..=6 {
            let p = zigzag_presentation(n);
            p.type_check().unwrap();
            assert_eq!(p.arrows.len(), crate::quiver::build_quiver(n).arrows.len());
        }
    }

    #[test]
    fn presentation_recognizes_families() {
        let p = presentation(&zigzag(3).unwrap()).unwrap();
        assert_eq!(p.objects.len(), 4);
        let p = presentation(&punctured_sphere(2).unwrap()).unwrap();
        assert_eq!(p.objects, vec!["I1", "J1"]);
        assert_eq!(p.arrows.len(), 2);
        assert_eq!(p.relations.len(), 1);
        let p = presentation(&genus_surface(2).unwrap()).unwrap();
        assert_eq!(p.objects.len(), 4);
        assert_eq!(p.arrows.len(), 7);
        p.type_check().unwrap();
        // An unrecognized diagram has no presentation.
        let z = ArcDiagram::new(
            vec![vec!["x".into()], vec!["y".into()]],
            &[("x".into(), "y".into())],
        )
        .unwrap();
        assert_eq!(presentation(&z), Err(ArcError::UnsupportedFamily));
    }

    #[test]
    fn presentation_text_round_trip() {
        for p in [
            zigzag_presentation(4),
            sphere_presentation(3),
            genus_presentation(2),
        ] {
            let t = p.to_text();
            assert_eq!(QuiverPresentation::from_text(&t).unwrap(), p);
        }
        // Ill-typed relations are rejected at parse time.
        assert!(QuiverPresentation::from_text(
            "objects: A B\narrow f: A -> B\nzero: f f\n"
        )
        .is_err());
        assert!(QuiverPresentation::from_text("arrow f: A -> B\n").is_err());
    }

    #[test]
    fn sphere_presentation_shape() {
        let p = sphere_presentation(4);
        assert_eq!(p.objects.len(), 6);
        // alpha + gamma per index, nu between consecutive.
        assert_eq!(p.arrows.len(), 3 + 3 + 2);
        p.type_check().unwrap();
        // Relations: one alpha-gamma zero per index, one nu-nu zero per pair.
        let zeros = p
            .relations
            .iter()
            .filter(|r| matches!(r, PresRelation::Zero(_)))
            .count();
        assert_eq!(zeros, 3 + 1);
    }
}
