//! Resolution of disk dividing sets into twisted complexes over the
//! elementary vertices.
//!
//! Every circle-free matching is homotopy equivalent to a one-sided twisted
//! complex whose objects are the elementary multicurves `gamma(e_S)`. The
//! resolution applies surgery triangles: a triangle on `d` exhibits `d` as
//! the cone of the map between its two other objects, and both of those are
//! strictly simpler. Phase 1 shrinks cocore intersection numbers above two
//! by surgering along three consecutive crossings of the violating cocore;
//! phase 2 straightens the canonical word of the matching one descent at a
//! time until every term is an ordered monomial.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::bypass::{apply_pattern, bypass_triangle, enumerate_equators, Equator, Pattern};
use crate::disk::{canonical_word, gamma_of_word, Chord, DividingSet};
use crate::gf2::{BitMatrix, BitVector};
use crate::quiver::{hom_dim, Vertex};
use crate::twisted::TwistedComplex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolveError {
    #[error("no surgery strictly decreases the measure on {0:?}")]
    NonTermination(String),
    #[error("cocore calibration failed for n = {0}: {1}")]
    Calibration(usize, String),
}

/// The cocore arc of a 1-handle of the zig-zag parameterization, recorded by
/// the two boundary gaps it connects. Gap `g` is the boundary interval
/// between marked points `g` and `g + 1`; gap 0 holds the basepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cocore {
    pub p: usize,
    pub gaps: (usize, usize),
}

/// The vertex corresponding to a handle subset: cutting the identity
/// multicurve along its odd handles and gluing even ones toggles membership
/// against the odd handles, so the subset maps to its symmetric difference
/// with the odd indices.
pub fn mu_object(n: usize, handles: &[usize]) -> Vertex {
    let mut mask = 0u32;
    for &h in handles {
        assert!((1..n).contains(&h), "handle {h} out of 1..{n}");
        mask ^= 1 << (h - 1);
    }
    for odd in (1..n).step_by(2) {
        mask ^= 1 << (odd - 1);
    }
    Vertex::from_mask(n, mask)
}

/// All elementary matchings, keyed by pairing, valued by their vertex.
fn elementary_table(n: usize) -> &'static HashMap<Vec<(usize, usize)>, Vertex> {
    static TABLES: OnceLock<Mutex<HashMap<usize, &'static HashMap<Vec<(usize, usize)>, Vertex>>>> =
        OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("table lock");
    if let Some(t) = guard.get(&n) {
        return t;
    }
    let mut table = HashMap::new();
    for mask in 0u32..1 << (n - 1) {
        let subset: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let d = gamma_of_word(n, &subset).expect("increasing words are reduced");
        table.insert(d.pairs(), Vertex::from_mask(n, mask));
    }
    let leaked: &'static HashMap<_, _> = Box::leak(Box::new(table));
    guard.insert(n, leaked);
    leaked
}

/// The vertex subset of an elementary matching, when there is one.
pub fn is_elementary(d: &DividingSet) -> Option<Vertex> {
    if d.circles() > 0 {
        return None;
    }
    elementary_table(d.n()).get(&d.pairs()).copied()
}

/// Cocore gap pairs, derived from the elementary family: the pair of gaps
/// for handle `p` is the unique one whose face distance is two on exactly
/// the elementary matchings whose handle set contains `p`, and zero on the
/// others. Results are memoized per disk size.
pub fn cocores(n: usize) -> Result<Vec<Cocore>, ResolveError> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Vec<Cocore>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("table lock");
    if let Some(t) = guard.get(&n) {
        return Ok(t.clone());
    }
    let odd_mask: u32 = (1..n)
        .step_by(2)
        .fold(0, |m, odd| m | 1 << (odd - 1));
    // Face trees and gap-face maps of all elementary matchings.
    let mut elems = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let subset: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let d = gamma_of_word(n, &subset).expect("increasing word");
        let tree = d.faces().expect("circle-free");
        let gap_face: Vec<usize> = (0..2 * n).map(|g| tree.face_of_gap(g)).collect();
        let handles = mask ^ odd_mask; // vertex mask back to handle mask
        elems.push((tree, gap_face, handles));
    }
    let mut out = Vec::new();
    for p in 1..n {
        let mut found = Vec::new();
        for u in 0..2 * n {
            for v in u + 1..2 * n {
                let ok = elems.iter().all(|(tree, gap_face, handles)| {
                    let want = if handles >> (p - 1) & 1 == 1 { 2 } else { 0 };
                    tree.distance(gap_face[u], gap_face[v]) == want
                });
                if ok {
                    found.push((u, v));
                }
            }
        }
        match found.as_slice() {
            [gaps] => out.push(Cocore { p, gaps: *gaps }),
            [] => {
                return Err(ResolveError::Calibration(
                    n,
                    format!("no gap pair matches handle {p}"),
                ))
            }
            many => {
                return Err(ResolveError::Calibration(
                    n,
                    format!("handle {p} admits {} gap pairs", many.len()),
                ))
            }
        }
    }
    guard.insert(n, out.clone());
    Ok(out)
}

/// Geometric intersection numbers of the cocore arcs with a matching: the
/// tree distance between the faces holding the two gaps.
pub fn cocore_intersections(d: &DividingSet) -> Result<Vec<usize>, ResolveError> {
    assert_eq!(d.circles(), 0, "zero object has no cocore counts");
    let tree = d.faces().expect("circle-free");
    Ok(cocores(d.n())?
        .iter()
        .map(|c| tree.distance(tree.face_of_gap(c.gaps.0), tree.face_of_gap(c.gaps.1)))
        .collect())
}

/// One triangle application in a resolution log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStep {
    pub input: DividingSet,
    pub equator: Equator,
    pub gamma1: DividingSet,
    pub gamma2: DividingSet,
}

/// A resolved dividing set: the twisted complex over elementary vertices
/// and the log of triangle applications that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub input: DividingSet,
    pub complex: TwistedComplex,
    pub log: Vec<TriangleStep>,
}

/// Equator choice order; the canonical strategy is fixed for determinism
/// but the output class does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Lowest violating cocore with the first crossing window, then the
    /// descent of the canonical word.
    Canonical,
    /// Scan candidate equators in reverse enumeration order.
    Alternate,
}

pub fn resolve(d: &DividingSet) -> Result<Resolution, ResolveError> {
    resolve_with(d, Strategy::Canonical)
}

pub fn resolve_with(d: &DividingSet, strategy: Strategy) -> Result<Resolution, ResolveError> {
    let mut log = Vec::new();
    let complex = resolve_rec(d, strategy, &mut log)?;
    Ok(Resolution {
        input: d.clone(),
        complex,
        log,
    })
}

/// Shortlex key of the canonical word, used as the phase-2 measure.
fn word_key(d: &DividingSet) -> (usize, Vec<usize>) {
    let w = canonical_word(d);
    (w.len(), w)
}

fn total_cocore(d: &DividingSet) -> Result<usize, ResolveError> {
    Ok(cocore_intersections(d)?.iter().sum())
}

/// Whether a triangle on `d` makes progress: both children either vanish or
/// get strictly simpler in the lexicographic measure
/// (total cocore count, shortlex canonical word).
fn progresses(d: &DividingSet, child: &DividingSet) -> Result<bool, ResolveError> {
    if child.circles() > 0 {
        return Ok(true);
    }
    let (td, tc) = (total_cocore(d)?, total_cocore(child)?);
    Ok(tc < td || (tc == td && word_key(child) < word_key(d)))
}

fn resolve_rec(
    d: &DividingSet,
    strategy: Strategy,
    log: &mut Vec<TriangleStep>,
) -> Result<TwistedComplex, ResolveError> {
    let n = d.n();
    if d.circles() > 0 {
        return Ok(TwistedComplex::zero(n));
    }
    if let Some(v) = is_elementary(d) {
        return Ok(TwistedComplex::single(v));
    }
    let e = choose_equator(d, strategy)?;
    let t = bypass_triangle(d, &e).expect("chosen equator is valid");
    log.push(TriangleStep {
        input: d.clone(),
        equator: e,
        gamma1: t.gamma1.clone(),
        gamma2: t.gamma2.clone(),
    });
    let r1 = resolve_rec(&t.gamma1, strategy, log)?;
    let r2 = resolve_rec(&t.gamma2, strategy, log)?;
    Ok(splice_cone(&r1, &r2))
}

/// Picks the surgery equator for one step.
fn choose_equator(d: &DividingSet, strategy: Strategy) -> Result<Equator, ResolveError> {
    let counts = cocore_intersections(d)?;
    if let Some(idx) = counts.iter().position(|&c| c > 2) {
        // Phase 1: surger along three consecutive crossings of the lowest
        // violating cocore.
        let tree = d.faces().expect("circle-free");
        let c = cocores(d.n())?[idx];
        let (fu, fv) = (tree.face_of_gap(c.gaps.0), tree.face_of_gap(c.gaps.1));
        let path = tree.path(fu, fv);
        let window: Vec<Chord> = match strategy {
            Strategy::Canonical => path[0..3].to_vec(),
            Strategy::Alternate => path[path.len() - 3..].to_vec(),
        };
        let mut faces = vec![match strategy {
            Strategy::Canonical => fu,
            Strategy::Alternate => {
                // walk from fu across the skipped prefix
                let mut f = fu;
                for chord in &path[..path.len() - 3] {
                    let (a, b) = tree.faces_of_chord(*chord).expect("path chord");
                    f = if a == f { b } else { a };
                }
                f
            }
        }];
        for chord in &window {
            let (a, b) = tree.faces_of_chord(*chord).expect("path chord");
            let last = *faces.last().unwrap();
            faces.push(if a == last { b } else { a });
        }
        let e = Equator {
            faces: [faces[0], faces[1], faces[2], faces[3]],
            chords: [window[0], window[1], window[2]],
        };
        let t = bypass_triangle(d, &e).expect("cocore window is essential");
        for child in [&t.gamma1, &t.gamma2] {
            if child.circles() == 0 && total_cocore(child)? >= total_cocore(d)? {
                return Err(ResolveError::NonTermination(format!("{d:?}")));
            }
        }
        return Ok(e);
    }

    // Phase 2: resolve the leftmost descent of the canonical word. The
    // triangle consists of the word with the descent pair deleted and the
    // word with the descent flipped.
    let w = canonical_word(d);
    let descent = w
        .windows(2)
        .position(|pair| pair[0] == pair[1] + 1)
        .expect("a non-elementary reduced word has an adjacent descent");
    let mut deleted = w.clone();
    deleted.drain(descent..descent + 2);
    let mut flipped = w.clone();
    flipped.swap(descent, descent + 1);
    let child_a = gamma_of_word(d.n(), &deleted).expect("subword");
    let child_b = gamma_of_word(d.n(), &flipped).expect("swap stays a word");

    let mut candidates = enumerate_equators(d).expect("circle-free");
    if strategy == Strategy::Alternate {
        candidates.reverse();
    }
    // Preferred: the triangle realizing the descent.
    for e in &candidates {
        let a = apply_pattern(d, &e.walk(), Pattern::A).expect("valid equator");
        let b = apply_pattern(d, &e.walk(), Pattern::B).expect("valid equator");
        if (a == child_a && b == child_b) || (a == child_b && b == child_a) {
            return Ok(*e);
        }
    }
    // Fallback: any triangle whose children both progress.
    for e in &candidates {
        let t = bypass_triangle(d, e).expect("valid equator");
        if progresses(d, &t.gamma1)? && progresses(d, &t.gamma2)? {
            return Ok(*e);
        }
    }
    Err(ResolveError::NonTermination(format!("{d:?}")))
}

/// The cone of the connecting map between two resolved complexes: objects of
/// the first, then objects of the second, with the canonical closed map in
/// the corner. The map is the sum of a kernel basis of the closedness
/// operator on the corner block, which is deterministic and nonzero whenever
/// any nonzero closed map exists.
fn splice_cone(r1: &TwistedComplex, r2: &TwistedComplex) -> TwistedComplex {
    let n = r1.n();
    let mut basis = Vec::new();
    for i in 0..r1.len() {
        for j in 0..r2.len() {
            if hom_dim(r1.objects()[i], r2.objects()[j]) == 1 {
                basis.push((i, j));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    // Closedness: p2 F + F p1 = 0.
    let mut op = BitMatrix::zeros(basis.len(), basis.len());
    for (col, &(i, j)) in basis.iter().enumerate() {
        for k in 0..r2.len() {
            if r2.entry(j, k) {
                op.toggle(index[&(i, k)], col);
            }
        }
        for l in 0..r1.len() {
            if r1.entry(l, i) {
                op.toggle(index[&(l, j)], col);
            }
        }
    }
    let mut f = BitVector::zeros(basis.len());
    for v in op.kernel_basis() {
        f.xor_assign(&v);
    }

    let mut objects = r1.objects().to_vec();
    objects.extend_from_slice(r2.objects());
    let mut entries = Vec::new();
    for (i, j) in r1.entries() {
        entries.push((i, j));
    }
    for (i, j) in r2.entries() {
        entries.push((r1.len() + i, r1.len() + j));
    }
    for k in f.iter_ones() {
        let (i, j) = basis[k];
        entries.push((i, r1.len() + j));
    }
    TwistedComplex::make(n, objects, &entries)
        .expect("cone of a closed map is a twisted complex")
}

/// The class of a resolution in the free GF(2) module on the vertices:
/// coordinate `S` counts the objects equal to `e_S` mod 2.
pub fn k0_class(r: &Resolution) -> BitVector {
    let n = r.input.n();
    let mut v = BitVector::zeros(1 << (n - 1));
    for obj in r.complex.objects() {
        let idx = obj.mask() as usize;
        let cur = v.get(idx);
        v.set(idx, !cur);
    }
    v
}

/// Resolution as JSON: objects, differential entries and the triangle log.
pub fn resolution_to_json(r: &Resolution) -> serde_json::Value {
    serde_json::json!({
        "input": r.input.to_json(),
        "complex": r.complex.to_json(),
        "log": r.log.iter().map(|s| serde_json::json!({
            "input": s.input.to_json(),
            "equator": s.equator.to_json(),
            "gamma1": s.gamma1.to_json(),
            "gamma2": s.gamma2.to_json(),
        })).collect::<Vec<_>>(),
    })
}
