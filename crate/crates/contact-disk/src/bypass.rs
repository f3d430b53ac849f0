//! Bypass attaching arcs and the bypass surgery on disk dividing sets.
//!
//! An essential attaching arc is, combinatorially, an injective length-3
//! path in the face tree of a matching: it crosses three pairwise distinct
//! chords through pairwise distinct faces. Cutting the three chords at the
//! crossings produces six half-chords; with `L_i`/`R_i` the halves on the
//! left/right of the directed arc, the three regluing patterns are
//!
//! * pattern C `{L_i R_i}` — the original matching,
//! * pattern A `{L1 L2, L3 R1, R2 R3}`,
//! * pattern B `{L2 L3, R1 R2, L1 R3}`,
//!
//! and the corresponding objects form the surgery triangle. The left/right
//! convention is fixed once and for all by the anchor on the nested
//! matching: the unique arc on `gamma(1)` for `n = 3` must send pattern A to
//! `gamma(e1 e2)` and pattern B to `gamma(e2 e1)`. Patterns are invariant
//! under reversing the direction of the walk.
//!
//! Walks with a single backtrack model capped bypasses. They cut one chord
//! twice, so the middle piece of that chord needs a side (the dip) to be
//! pinned before the surgery is defined; one side evaluates to the identity,
//! the other produces a circle and hence the zero object.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::disk::{Chord, DividingSet, FaceTree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BypassError {
    #[error("dividing set contains circles and is the zero object")]
    ZeroObject,
    #[error("walk is not a valid attaching arc on this dividing set: {0}")]
    InvalidEquator(String),
    #[error("equator touches a reglued chord and cannot be transported")]
    NotTransportable,
    #[error("invalid equator encoding: {0}")]
    BadEncoding(String),
}

/// Side of the directed attaching arc on which the middle piece of a doubly
/// cut chord lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dip {
    Left,
    Right,
}

/// A length-3 walk through the face tree: faces `f0..f3` and crossed chords
/// `c1..c3`. Injective walks are essential attaching arcs; walks with one
/// backtrack are capped and carry the dip side of the doubled chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceWalk {
    pub faces: [usize; 4],
    pub chords: [Chord; 3],
    pub dip: Option<Dip>,
}

/// An essential attaching arc (an injective walk).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Equator {
    pub faces: [usize; 4],
    pub chords: [Chord; 3],
}

impl Equator {
    pub fn walk(&self) -> FaceWalk {
        FaceWalk {
            faces: self.faces,
            chords: self.chords,
            dip: None,
        }
    }

    /// Interior faces actually traversed by the arc.
    pub fn interior_faces(&self) -> [usize; 2] {
        [self.faces[1], self.faces[2]]
    }

    pub fn middle_chord(&self) -> Chord {
        self.chords[1]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "faces": self.faces,
            "chords": self.chords.iter().map(|c| [c.0 + 1, c.1 + 1]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_str(s: &str, d: &DividingSet) -> Result<Self, BypassError> {
        #[derive(Deserialize)]
        struct EqJson {
            faces: [usize; 4],
            chords: [[usize; 2]; 3],
        }
        let raw: EqJson =
            serde_json::from_str(s).map_err(|e| BypassError::BadEncoding(e.to_string()))?;
        for c in &raw.chords {
            if c[0] == 0 || c[1] == 0 || c[0] > 2 * d.n() || c[1] > 2 * d.n() || c[0] == c[1] {
                return Err(BypassError::BadEncoding("chord endpoint out of range".into()));
            }
        }
        let chords = [
            Chord::new(raw.chords[0][0] - 1, raw.chords[0][1] - 1),
            Chord::new(raw.chords[1][0] - 1, raw.chords[1][1] - 1),
            Chord::new(raw.chords[2][0] - 1, raw.chords[2][1] - 1),
        ];
        let eq = Equator {
            faces: raw.faces,
            chords,
        };
        validate_equator(d, &eq)?;
        Ok(eq)
    }
}

/// Checks that an equator is an injective 3-path in the face tree of `d`.
fn validate_equator(d: &DividingSet, e: &Equator) -> Result<(), BypassError> {
    let tree = d.faces().map_err(|_| BypassError::ZeroObject)?;
    for k in 0..3 {
        let (a, b, c) = (e.faces[k], e.faces[k + 1], e.chords[k]);
        let Some((fa, fb)) = tree.faces_of_chord(c) else {
            return Err(BypassError::InvalidEquator(format!("{c:?} is not a chord")));
        };
        if (fa, fb) != (a.min(b), a.max(b)) {
            return Err(BypassError::InvalidEquator(format!(
                "{c:?} does not separate faces {a} and {b}"
            )));
        }
    }
    let mut fs = e.faces.to_vec();
    fs.sort_unstable();
    fs.dedup();
    if fs.len() != 4 {
        return Err(BypassError::InvalidEquator("walk revisits a face".into()));
    }
    Ok(())
}

/// All essential attaching arcs on `d`: injective directed 3-paths in the
/// face tree, each unordered path listed once, directed from its lower face.
pub fn enumerate_equators(d: &DividingSet) -> Result<Vec<Equator>, BypassError> {
    let tree = d.faces().map_err(|_| BypassError::ZeroObject)?;
    let mut out = Vec::new();
    for &(a, b, c2) in &tree.edges {
        for (f1, f2) in [(a, b), (b, a)] {
            for (f0, c1) in tree.neighbors(f1) {
                if f0 == f2 {
                    continue;
                }
                for (f3, c3) in tree.neighbors(f2) {
                    if f3 == f1 {
                        continue;
                    }
                    // In a tree f0 != f3 automatically; keep one direction
                    // per unordered path.
                    if f0 < f3 {
                        out.push(Equator {
                            faces: [f0, f1, f2, f3],
                            chords: [c1, c2, c3],
                        });
                    }
                }
            }
        }
    }
    out.sort_by_key(|e| (e.faces, e.chords));
    Ok(out)
}

/// Port-graph surgery. Each crossing contributes two ports; the pattern
/// joins ports inside a neighborhood of the arc, and the chord pieces
/// outside it finish the trace. Components without boundary endpoints are
/// circles.
struct Surgery {
    /// For each crossing k = 0..3: ports `(k, Left)` and `(k, Right)`.
    /// port id = 2k + side.
    port_join_outside: Vec<PortTarget>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PortTarget {
    /// The half-chord runs to a marked point (0-based).
    Boundary(usize),
    /// The middle piece of a doubly cut chord runs to another port.
    Port(usize),
}

const LEFT: usize = 0;
const RIGHT: usize = 1;

fn port(k: usize, side: usize) -> usize {
    2 * k + side
}

/// Computes the outside wiring of the six ports for a (possibly capped)
/// walk. The left endpoint at a single crossing is the tail of the chord as
/// traversed by the face before it (the anchor calibration).
fn outside_wiring(
    d: &DividingSet,
    tree: &FaceTree,
    walk: &FaceWalk,
) -> Result<Surgery, BypassError> {
    let mut join = vec![PortTarget::Boundary(usize::MAX); 6];
    let doubled = (0..2).find(|&k| walk.chords[k] == walk.chords[k + 1]);
    for k in 0..3 {
        if let Some(dk) = doubled {
            if k == dk || k == dk + 1 {
                continue; // handled below
            }
        }
        let (tail, head) = tree
            .traversal(walk.faces[k], walk.chords[k])
            .ok_or_else(|| BypassError::InvalidEquator("face does not meet chord".into()))?;
        join[port(k, LEFT)] = PortTarget::Boundary(tail);
        join[port(k, RIGHT)] = PortTarget::Boundary(head);
    }
    if let Some(k) = doubled {
        let Some(dip) = walk.dip else {
            return Err(BypassError::InvalidEquator(
                "backtracking walk needs a dip side".into(),
            ));
        };
        let (tail, head) = tree
            .traversal(walk.faces[k], walk.chords[k])
            .ok_or_else(|| BypassError::InvalidEquator("face does not meet chord".into()))?;
        match dip {
            Dip::Left => {
                // Middle piece on the left: chord reads head, cut k,
                // middle, cut k+1, tail.
                join[port(k, LEFT)] = PortTarget::Port(port(k + 1, LEFT));
                join[port(k + 1, LEFT)] = PortTarget::Port(port(k, LEFT));
                join[port(k, RIGHT)] = PortTarget::Boundary(head);
                join[port(k + 1, RIGHT)] = PortTarget::Boundary(tail);
            }
            Dip::Right => {
                join[port(k, RIGHT)] = PortTarget::Port(port(k + 1, RIGHT));
                join[port(k + 1, RIGHT)] = PortTarget::Port(port(k, RIGHT));
                join[port(k, LEFT)] = PortTarget::Boundary(tail);
                join[port(k + 1, LEFT)] = PortTarget::Boundary(head);
            }
        }
    }
    let _ = d;
    Ok(Surgery {
        port_join_outside: join,
    })
}

/// The two nontrivial regluing patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    A,
    B,
}

fn pattern_pairs(p: Pattern) -> [(usize, usize); 3] {
    match p {
        Pattern::A => [
            (port(0, LEFT), port(1, LEFT)),
            (port(2, LEFT), port(0, RIGHT)),
            (port(1, RIGHT), port(2, RIGHT)),
        ],
        Pattern::B => [
            (port(1, LEFT), port(2, LEFT)),
            (port(0, RIGHT), port(1, RIGHT)),
            (port(0, LEFT), port(2, RIGHT)),
        ],
    }
}

/// Applies a regluing pattern along a walk and returns the resulting
/// dividing set (circles included, sign preserved).
pub fn apply_pattern(
    d: &DividingSet,
    walk: &FaceWalk,
    pattern: Pattern,
) -> Result<DividingSet, BypassError> {
    let tree = d.faces().map_err(|_| BypassError::ZeroObject)?;
    let surgery = outside_wiring(d, &tree, walk)?;
    let inside = pattern_pairs(pattern);

    // Trace each new component: start from a pattern edge, alternate between
    // inside joins and outside continuations until a boundary point (or the
    // starting port again, which closes a circle).
    let mut pairing = vec![usize::MAX; 2 * d.n()];
    let mut circles = d.circles();
    let crossed: Vec<Chord> = {
        let mut cs = walk.chords.to_vec();
        cs.sort_unstable();
        cs.dedup();
        cs
    };
    for c in d.chords() {
        if !crossed.contains(&c) {
            pairing[c.0] = c.1;
            pairing[c.1] = c.0;
        }
    }
    let other_inside = |p: usize| -> usize {
        for &(a, b) in &inside {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        unreachable!("every port appears in the pattern")
    };
    // Each port carries exactly one pattern edge and one outside
    // continuation, so components are paths ending on the boundary or
    // closed circles. Walk from each unvisited port with alternating moves.
    let mut seen = [false; 6];
    let walk_to_boundary = |start: usize, seen: &mut [bool; 6]| -> Option<usize> {
        let mut cur = start;
        loop {
            seen[cur] = true;
            match surgery.port_join_outside[cur] {
                PortTarget::Boundary(b) => return Some(b),
                PortTarget::Port(q) => {
                    seen[q] = true;
                    let next = other_inside(q);
                    if next == start {
                        return None; // closed up: a circle component
                    }
                    cur = next;
                }
            }
        }
    };
    for s in 0..6 {
        if seen[s] {
            continue;
        }
        // The component through the pattern edge at s: walk outward from
        // both of its endpoints.
        let t = other_inside(s);
        seen[s] = true;
        seen[t] = true;
        match walk_to_boundary(s, &mut seen) {
            None => circles += 1,
            Some(a) => {
                let b = walk_to_boundary(t, &mut seen)
                    .expect("a path component has two boundary ends");
                pairing[a] = b;
                pairing[b] = a;
            }
        }
    }
    DividingSet::from_involution(d.n(), pairing, circles, d.sign())
        .map_err(|e| BypassError::InvalidEquator(format!("surgery output invalid: {e}")))
}

/// The bypass surgery along an essential arc: pattern A.
pub fn apply_bypass(d: &DividingSet, e: &Equator) -> Result<DividingSet, BypassError> {
    validate_equator(d, e)?;
    apply_pattern(d, &e.walk(), Pattern::A)
}

/// The three-object surgery triangle on an essential arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BypassTriangle {
    /// Pattern C: the input.
    pub gamma0: DividingSet,
    /// Pattern A: target of the first map.
    pub gamma1: DividingSet,
    /// Pattern B: target of the second map.
    pub gamma2: DividingSet,
}

pub fn bypass_triangle(d: &DividingSet, e: &Equator) -> Result<BypassTriangle, BypassError> {
    validate_equator(d, e)?;
    let gamma1 = apply_pattern(d, &e.walk(), Pattern::A)?;
    let gamma2 = apply_pattern(d, &e.walk(), Pattern::B)?;
    Ok(BypassTriangle {
        gamma0: d.clone(),
        gamma1,
        gamma2,
    })
}

/// Outcome classification for a possibly backtracking walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkClass {
    Essential,
    IdentityCapped,
    ZeroCapped,
}

/// Classifies a length-3 face walk: injective walks are essential; a capped
/// walk is evaluated by performing the surgery, with an outcome isotopic to
/// the input meaning identity and an outcome containing a circle meaning
/// zero.
pub fn classify(d: &DividingSet, walk: &FaceWalk) -> Result<WalkClass, BypassError> {
    let mut fs = walk.faces.to_vec();
    fs.sort_unstable();
    fs.dedup();
    if fs.len() == 4 {
        return Ok(WalkClass::Essential);
    }
    let out = apply_pattern(d, walk, Pattern::A)?;
    if out.circles() > d.circles() {
        Ok(WalkClass::ZeroCapped)
    } else if out == *d {
        Ok(WalkClass::IdentityCapped)
    } else {
        Err(BypassError::InvalidEquator(format!(
            "capped surgery produced neither the input nor a circle: {out:?}"
        )))
    }
}

/// Two essential arcs are disjoint exactly when their interior faces are
/// disjoint; shared chords are then possible only as end chords touched from
/// opposite sides, which never forces an intersection.
pub fn are_disjoint(e1: &Equator, e2: &Equator) -> bool {
    if e1 == e2 {
        return false;
    }
    let [a1, b1] = e1.interior_faces();
    !e2.interior_faces().contains(&a1) && !e2.interior_faces().contains(&b1)
}

/// Transports `e2` across the surgery of `e1` and checks that the two
/// orders of surgery agree.
///
/// Untouched chords persist; a shared end chord is replaced by the new chord
/// containing the half glued to the middle chord of `e1` (the transported
/// arc stays clear of the corridor of `e1`).
pub fn commute_check(
    d: &DividingSet,
    e1: &Equator,
    e2: &Equator,
) -> Result<bool, BypassError> {
    if !are_disjoint(e1, e2) {
        return Err(BypassError::NotTransportable);
    }
    validate_equator(d, e1)?;
    validate_equator(d, e2)?;
    let one_then_two = {
        let mid = apply_bypass(d, e1)?;
        let e2t = transport(d, e1, e2, &mid)?;
        apply_bypass(&mid, &e2t)?
    };
    let two_then_one = {
        let mid = apply_bypass(d, e2)?;
        let e1t = transport(d, e2, e1, &mid)?;
        apply_bypass(&mid, &e1t)?
    };
    Ok(one_then_two == two_then_one)
}

/// Rewrites the chords of `e2` on the matching obtained by performing `e1`,
/// then rebuilds the face walk there.
fn transport(
    d: &DividingSet,
    e1: &Equator,
    e2: &Equator,
    result: &DividingSet,
) -> Result<Equator, BypassError> {
    let tree = d.faces().map_err(|_| BypassError::ZeroObject)?;
    if e1.chords.contains(&e2.middle_chord()) {
        return Err(BypassError::NotTransportable);
    }
    let mut new_chords = [Chord(0, 0); 3];
    for (slot, &c) in e2.chords.iter().enumerate() {
        if let Some(k) = e1.chords.iter().position(|&c1| c1 == c) {
            if k == 1 {
                return Err(BypassError::NotTransportable);
            }
            // Shared end chord: it was cut at crossing k of e1. Pattern A
            // glues L1-L2, L3-R1, R2-R3; the half adjacent to the middle
            // chord is L1 at crossing 0 and R3 at crossing 2, landing in the
            // new chords L1L2 and R2R3 respectively.
            let (tail, head) = tree
                .traversal(e1.faces[k], e1.chords[k])
                .expect("validated walk");
            let kept_end = if k == 0 { tail } else { head };
            let new_chord = result
                .chords()
                .into_iter()
                .find(|nc| nc.0 == kept_end || nc.1 == kept_end)
                .expect("the kept half persists into the surgery output");
            new_chords[slot] = new_chord;
        } else {
            new_chords[slot] = c;
        }
    }
    // Rebuild faces from the chord sequence on the new matching.
    let tree2 = result.faces().map_err(|_| BypassError::ZeroObject)?;
    let common_face = |a: Chord, b: Chord| -> Result<usize, BypassError> {
        let (a1, a2) = tree2
            .faces_of_chord(a)
            .ok_or(BypassError::NotTransportable)?;
        let (b1, b2) = tree2
            .faces_of_chord(b)
            .ok_or(BypassError::NotTransportable)?;
        [a1, a2]
            .into_iter()
            .find(|f| *f == b1 || *f == b2)
            .ok_or(BypassError::NotTransportable)
    };
    let f1 = common_face(new_chords[0], new_chords[1])?;
    let f2 = common_face(new_chords[1], new_chords[2])?;
    let (c1a, c1b) = tree2.faces_of_chord(new_chords[0]).unwrap();
    let f0 = if c1a == f1 { c1b } else { c1a };
    let (c3a, c3b) = tree2.faces_of_chord(new_chords[2]).unwrap();
    let f3 = if c3a == f2 { c3b } else { c3a };
    let eq = Equator {
        faces: [f0, f1, f2, f3],
        chords: new_chords,
    };
    validate_equator(result, &eq)?;
    Ok(eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{gamma_of_word, DividingSet, Sign};

    fn nested(n: usize) -> DividingSet {
        gamma_of_word(n, &[]).unwrap()
    }

    #[test]
    fn equator_counts() {
        // Nested n = 3: face tree is a path on 4 nodes, one injective 3-path.
        assert_eq!(enumerate_equators(&nested(3)).unwrap().len(), 1);
        // n = 1: a single chord, no arcs.
        let d = DividingSet::from_pairs(1, &[(1, 2)], Sign::Plus).unwrap();
        assert_eq!(enumerate_equators(&d).unwrap().len(), 0);
        // gamma(e1) n = 3: star tree, no injective 3-path.
        let star = gamma_of_word(3, &[1]).unwrap();
        assert_eq!(enumerate_equators(&star).unwrap().len(), 0);
        // Zero objects are rejected.
        assert_eq!(
            enumerate_equators(&nested(3).with_circles(1)),
            Err(BypassError::ZeroObject)
        );
    }

    #[test]
    fn anchor_triangle_on_the_nested_matching() {
        let d = nested(3);
        let eqs = enumerate_equators(&d).unwrap();
        assert_eq!(eqs.len(), 1);
        let t = bypass_triangle(&d, &eqs[0]).unwrap();
        assert_eq!(t.gamma0, d);
        assert_eq!(t.gamma1, gamma_of_word(3, &[1, 2]).unwrap());
        assert_eq!(t.gamma2, gamma_of_word(3, &[2, 1]).unwrap());
    }

    #[test]
    fn triangle_on_the_unordered_word_recovers_the_anchor() {
        // The unique arc on gamma(e2 e1) produces {gamma(1), gamma(e1 e2)}.
        let d = gamma_of_word(3, &[2, 1]).unwrap();
        let eqs = enumerate_equators(&d).unwrap();
        assert_eq!(eqs.len(), 1);
        let t = bypass_triangle(&d, &eqs[0]).unwrap();
        assert_eq!(t.gamma1, nested(3));
        assert_eq!(t.gamma2, gamma_of_word(3, &[1, 2]).unwrap());
    }

    #[test]
    fn pattern_is_direction_invariant() {
        for n in 2..=4 {
            for d in DividingSet::enumerate(n) {
                for e in enumerate_equators(&d).unwrap() {
                    let rev = Equator {
                        faces: [e.faces[3], e.faces[2], e.faces[1], e.faces[0]],
                        chords: [e.chords[2], e.chords[1], e.chords[0]],
                    };
                    assert_eq!(
                        apply_bypass(&d, &e).unwrap(),
                        apply_bypass(&d, &rev).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn first_window_on_the_nested_five_strand_matching() {
        let d = nested(5);
        let tree = d.faces().unwrap();
        // The three outermost chords crossed from the basepoint face inward.
        let e = Equator {
            faces: [0, 1, 2, 3],
            chords: [
                tree.path(0, 1)[0],
                tree.path(1, 2)[0],
                tree.path(2, 3)[0],
            ],
        };
        assert_eq!(apply_bypass(&d, &e).unwrap(), gamma_of_word(5, &[1, 2]).unwrap());
    }

    #[test]
    fn euler_and_sign_invariance() {
        for n in 2..=5 {
            for d in DividingSet::enumerate(n) {
                let e0 = d.euler_number().unwrap();
                for e in enumerate_equators(&d).unwrap() {
                    let t = bypass_triangle(&d, &e).unwrap();
                    for g in [&t.gamma1, &t.gamma2] {
                        assert_eq!(g.circles(), 0, "essential surgery stays circle-free");
                        assert_eq!(g.euler_number().unwrap(), e0);
                        assert_eq!(g.sign(), d.sign());
                    }
                    // The three objects are pairwise distinct.
                    assert_ne!(t.gamma1, t.gamma0);
                    assert_ne!(t.gamma2, t.gamma0);
                    assert_ne!(t.gamma1, t.gamma2);
                }
            }
        }
    }

    #[test]
    fn capped_walks_evaluate_to_identity_or_zero() {
        // Nested n = 3, face tree 0 - 1 - 2 - 3. Dip into face 2 across the
        // middle chord and come back, then cross the outermost chord.
        let d = nested(3);
        let tree = d.faces().unwrap();
        let outer = tree.path(0, 1)[0];
        let middle = tree.path(1, 2)[0];
        for (dip, expected) in [
            (Dip::Right, WalkClass::IdentityCapped),
            (Dip::Left, WalkClass::ZeroCapped),
        ] {
            let walk = FaceWalk {
                faces: [1, 2, 1, 0],
                chords: [middle, middle, outer],
                dip: Some(dip),
            };
            assert_eq!(classify(&d, &walk).unwrap(), expected, "dip {dip:?}");
        }
        // Backtrack at the end instead: the dip sides swap roles.
        for (dip, expected) in [
            (Dip::Left, WalkClass::IdentityCapped),
            (Dip::Right, WalkClass::ZeroCapped),
        ] {
            let walk = FaceWalk {
                faces: [0, 1, 2, 1],
                chords: [outer, middle, middle],
                dip: Some(dip),
            };
            assert_eq!(classify(&d, &walk).unwrap(), expected, "dip {dip:?}");
        }
        // Injective walks classify as essential.
        let e = enumerate_equators(&d).unwrap()[0];
        assert_eq!(classify(&d, &e.walk()).unwrap(), WalkClass::Essential);
    }

    #[test]
    fn capped_zero_outcome_normalizes_to_zero() {
        let d = nested(3);
        let tree = d.faces().unwrap();
        let outer = tree.path(0, 1)[0];
        let middle = tree.path(1, 2)[0];
        let walk = FaceWalk {
            faces: [1, 2, 1, 0],
            chords: [middle, middle, outer],
            dip: Some(Dip::Left),
        };
        let out = apply_pattern(&d, &walk, Pattern::A).unwrap();
        assert!(out.circles() > 0);
        assert!(out.normalize().is_none());
    }

    #[test]
    fn disjointness_examples() {
        let d = nested(5);
        let eqs = enumerate_equators(&d).unwrap();
        // Face tree is the path 0-1-2-3-4-5; arcs live on edge windows.
        let theta1 = eqs
            .iter()
            .find(|e| e.faces == [0, 1, 2, 3])
            .expect("window arc");
        let theta3 = eqs
            .iter()
            .find(|e| e.faces == [2, 3, 4, 5])
            .expect("window arc");
        assert!(are_disjoint(theta1, theta3));
        assert!(!are_disjoint(theta1, theta1));
        // Overlapping windows share an interior face.
        let theta2 = eqs.iter().find(|e| e.faces == [1, 2, 3, 4]).unwrap();
        assert!(!are_disjoint(theta1, theta2));
    }

    #[test]
    fn disjoint_bypasses_commute() {
        let d = nested(5);
        let eqs = enumerate_equators(&d).unwrap();
        let theta1 = *eqs.iter().find(|e| e.faces == [0, 1, 2, 3]).unwrap();
        let theta3 = *eqs.iter().find(|e| e.faces == [2, 3, 4, 5]).unwrap();
        assert!(commute_check(&d, &theta1, &theta3).unwrap());
        // Both orders produce the fully ordered four-generator multicurve.
        let mid = apply_bypass(&d, &theta1).unwrap();
        let t = transport(&d, &theta1, &theta3, &mid).unwrap();
        assert_eq!(
            apply_bypass(&mid, &t).unwrap(),
            gamma_of_word(5, &[1, 2, 3, 4]).unwrap()
        );
    }

    #[test]
    fn disjoint_commutation_exhaustive_small() {
        // Disjoint pairs first appear at n = 5 (two arcs need four distinct
        // interior faces).
        let mut found = 0usize;
        for n in 2..=5 {
            for d in DividingSet::enumerate(n) {
                let eqs = enumerate_equators(&d).unwrap();
                for (i, e1) in eqs.iter().enumerate() {
                    for e2 in &eqs[i + 1..] {
                        if are_disjoint(e1, e2) {
                            found += 1;
                            assert!(commute_check(&d, e1, e2).unwrap());
                        }
                    }
                }
            }
        }
        assert!(found > 0, "the check must not be vacuous");
    }

    #[test]
    fn non_disjoint_pairs_are_rejected() {
        let d = nested(5);
        let eqs = enumerate_equators(&d).unwrap();
        let theta1 = *eqs.iter().find(|e| e.faces == [0, 1, 2, 3]).unwrap();
        let theta2 = *eqs.iter().find(|e| e.faces == [1, 2, 3, 4]).unwrap();
        assert_eq!(
            commute_check(&d, &theta1, &theta2),
            Err(BypassError::NotTransportable)
        );
    }

    #[test]
    fn equator_json_round_trip() {
        let d = nested(3);
        let e = enumerate_equators(&d).unwrap()[0];
        let s = e.to_json().to_string();
        assert_eq!(Equator::from_json_str(&s, &d).unwrap(), e);
        assert!(Equator::from_json_str("{\"faces\":[0,1,2,3],\"chords\":[[1,2],[1,2],[1,2]]}", &d).is_err());
    }
}
