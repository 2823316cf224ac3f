//! Rectilinear fence diagrams for banded annuli.
//!
//! A fence is a finite union of disjoint vertical segments (posts) and
//! horizontal segments (wires) in the plane: every wire endpoint lies on a
//! post, post abscissae are pairwise distinct, and wire ordinates are
//! pairwise distinct. Wires pass over posts at every transversal crossing.
//! A fence is *annular* when the union is an embedded closed 1-manifold:
//! every wire endpoint sits at a post endpoint and every post endpoint meets
//! exactly one wire endpoint.
//!
//! Fences mediate between band representations in the braid group, positive
//! plat presentations, and link diagrams. The key quantities are the writhe
//! of the induced diagram and the count `m` of upper-right corners; for a
//! one-component annular fence, `writhe - m` is the framing certified by the
//! corresponding quasipositive annulus.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::braid::{
    Band, BandRepresentation, BraidError, BraidWord, Plat, PlatHalf, PlatPlan,
};
use crate::diagram::{dart, Dart, DiagramError, LinkDiagram};

/// Errors from fence construction and the fence/plat translations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FenceError {
    #[error("invalid fence: {0}")]
    Invalid(String),
    #[error("operation requires an annular fence")]
    NotAnnular,
    #[error("operation requires a one-component fence, found {0} components")]
    MultiComponent(usize),
    #[error("invalid fence JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Vertical segment `{x} × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Post {
    pub x: i64,
    pub y0: i64,
    pub y1: i64,
}

/// Horizontal segment `[x0, x1] × {y}` with `x0 < x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wire {
    pub x0: i64,
    pub x1: i64,
    pub y: i64,
}

/// A validated fence. Posts are stored sorted by abscissa and wires sorted
/// by ordinate, so structural equality is equality of drawings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fence {
    posts: Vec<Post>,
    wires: Vec<Wire>,
}

/// A fence together with a charge (±1) on every wire, indexed parallel to
/// `fence.wires()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedFence {
    pub fence: Fence,
    charges: Vec<i8>,
}

/// Component count and labeling of an annular fence's 1-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenceComponents {
    pub count: usize,
    /// Component id per post, parallel to `posts()`.
    pub post_comp: Vec<usize>,
    /// Component id per wire, parallel to `wires()`.
    pub wire_comp: Vec<usize>,
}

impl Fence {
    pub fn new(posts: Vec<Post>, wires: Vec<Wire>) -> Result<Self, FenceError> {
        if posts.is_empty() {
            return Err(FenceError::Invalid("a fence needs at least one post".into()));
        }
        let mut posts = posts;
        let mut wires = wires;
        posts.sort_by_key(|p| p.x);
        wires.sort_by_key(|w| w.y);
        for p in &posts {
            if p.y0 > p.y1 {
                return Err(FenceError::Invalid(format!(
                    "post at x={} has reversed interval [{}, {}]",
                    p.x, p.y0, p.y1
                )));
            }
        }
        for pair in posts.windows(2) {
            if pair[0].x == pair[1].x {
                return Err(FenceError::Invalid(format!(
                    "two posts share abscissa {}",
                    pair[0].x
                )));
            }
        }
        for w in &wires {
            if w.x0 >= w.x1 {
                return Err(FenceError::Invalid(format!(
                    "wire at y={} has degenerate span [{}, {}]",
                    w.y, w.x0, w.x1
                )));
            }
        }
        for pair in wires.windows(2) {
            if pair[0].y == pair[1].y {
                return Err(FenceError::Invalid(format!(
                    "two wires share ordinate {}",
                    pair[0].y
                )));
            }
        }
        let by_x: BTreeMap<i64, &Post> = posts.iter().map(|p| (p.x, p)).collect();
        for w in &wires {
            for end in [w.x0, w.x1] {
                let p = by_x.get(&end).ok_or_else(|| {
                    FenceError::Invalid(format!(
                        "wire endpoint ({end}, {}) lies on no post",
                        w.y
                    ))
                })?;
                if w.y < p.y0 || w.y > p.y1 {
                    return Err(FenceError::Invalid(format!(
                        "wire endpoint ({end}, {}) misses the post at x={end}",
                        w.y
                    )));
                }
            }
        }
        // Genericity: a wire interior may not pass through a post endpoint.
        for w in &wires {
            for p in &posts {
                if p.x > w.x0 && p.x < w.x1 && (w.y == p.y0 || w.y == p.y1) {
                    return Err(FenceError::Invalid(format!(
                        "wire at y={} passes through an endpoint of the post at x={}",
                        w.y, p.x
                    )));
                }
            }
        }
        Ok(Fence { posts, wires })
    }

    pub fn posts(&self) -> &[Post] {
        &self.posts
    }

    pub fn wires(&self) -> &[Wire] {
        &self.wires
    }

    /// The same fence with abscissae renumbered 1..P and all occurring
    /// ordinates renumbered 1..K, preserving every order relation.
    pub fn renumbered(&self) -> Fence {
        let xs: BTreeMap<i64, i64> = self
            .posts
            .iter()
            .map(|p| p.x)
            .enumerate()
            .map(|(k, x)| (x, k as i64 + 1))
            .collect();
        let mut yset = BTreeSet::new();
        for w in &self.wires {
            yset.insert(w.y);
        }
        for p in &self.posts {
            yset.insert(p.y0);
            yset.insert(p.y1);
        }
        let ys: BTreeMap<i64, i64> = yset
            .into_iter()
            .enumerate()
            .map(|(k, y)| (y, k as i64 + 1))
            .collect();
        let posts = self
            .posts
            .iter()
            .map(|p| Post { x: xs[&p.x], y0: ys[&p.y0], y1: ys[&p.y1] })
            .collect();
        let wires = self
            .wires
            .iter()
            .map(|w| Wire { x0: xs[&w.x0], x1: xs[&w.x1], y: ys[&w.y] })
            .collect();
        Fence { posts, wires }
    }

    pub fn to_json_string(&self) -> String {
        let cf = ChargedFence { fence: self.clone(), charges: vec![1; self.wires.len()] };
        cf.to_json_string()
    }
}

impl ChargedFence {
    /// `charges[i]` belongs to `fence.wires()[i]`.
    pub fn new(fence: Fence, charges: Vec<i8>) -> Result<Self, FenceError> {
        if charges.len() != fence.wires.len() {
            return Err(FenceError::Invalid(format!(
                "{} charges for {} wires",
                charges.len(),
                fence.wires.len()
            )));
        }
        if let Some(c) = charges.iter().find(|&&c| c != 1 && c != -1) {
            return Err(FenceError::Invalid(format!("charge {c} is not ±1")));
        }
        Ok(ChargedFence { fence, charges })
    }

    pub fn charges(&self) -> &[i8] {
        &self.charges
    }

    pub fn to_json_string(&self) -> String {
        let doc = FenceDoc {
            posts: self.fence.posts.clone(),
            wires: self
                .fence
                .wires
                .iter()
                .zip(&self.charges)
                .map(|(w, &c)| WireDoc { x0: w.x0, x1: w.x1, y: w.y, charge: c })
                .collect(),
        };
        serde_json::to_string(&doc).expect("fence serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, FenceError> {
        let doc: FenceDoc =
            serde_json::from_str(s).map_err(|e| FenceError::Json(e.to_string()))?;
        let wires = doc.wires.iter().map(|w| Wire { x0: w.x0, x1: w.x1, y: w.y }).collect();
        let fence = Fence::new(doc.posts, wires)?;
        let mut order: Vec<usize> = (0..doc.wires.len()).collect();
        order.sort_by_key(|&k| doc.wires[k].y);
        let charges = order.iter().map(|&k| doc.wires[k].charge).collect();
        ChargedFence::new(fence, charges)
    }
}

#[derive(Serialize, Deserialize)]
struct FenceDoc {
    posts: Vec<Post>,
    wires: Vec<WireDoc>,
}

#[derive(Serialize, Deserialize)]
struct WireDoc {
    x0: i64,
    x1: i64,
    y: i64,
    #[serde(default = "default_charge")]
    charge: i8,
}

fn default_charge() -> i8 {
    1
}

/// Construction of a fence from a band representation: one post per strand,
/// one charged wire per band at its own height. Posts are trimmed to the
/// span of heights at which their strand is actually used, so that the fence
/// of an annular representation is annular; an unused strand keeps a point
/// post parked above every wire.
pub fn band_rep_to_fence(b: &BandRepresentation) -> Result<ChargedFence, FenceError> {
    let n = b.strands();
    let k = b.bands().len() as i64;
    if n == 0 {
        return Err(FenceError::Invalid("band representation on zero strands".into()));
    }
    let mut lo = vec![i64::MAX; n + 1];
    let mut hi = vec![i64::MIN; n + 1];
    for (t, band) in b.bands().iter().enumerate() {
        let y = t as i64 + 1;
        for s in [band.i, band.j] {
            lo[s] = lo[s].min(y);
            hi[s] = hi[s].max(y);
        }
    }
    let posts = (1..=n)
        .map(|s| {
            if lo[s] == i64::MAX {
                Post { x: s as i64, y0: k + 1, y1: k + 1 }
            } else {
                Post { x: s as i64, y0: lo[s], y1: hi[s] }
            }
        })
        .collect();
    let wires = b
        .bands()
        .iter()
        .enumerate()
        .map(|(t, band)| Wire { x0: band.i as i64, x1: band.j as i64, y: t as i64 + 1 })
        .collect();
    let charges = b.bands().iter().map(|band| band.sign).collect();
    ChargedFence::new(Fence::new(posts, wires)?, charges)
}

/// Reads a band representation back off a charged fence: posts ranked by
/// abscissa name the strands, wires in ordinate order name the bands.
pub fn fence_to_band_rep(cf: &ChargedFence) -> Result<BandRepresentation, FenceError> {
    let n = cf.fence.posts.len();
    let rank: BTreeMap<i64, usize> = cf
        .fence
        .posts
        .iter()
        .enumerate()
        .map(|(k, p)| (p.x, k + 1))
        .collect();
    let mut bands = Vec::with_capacity(cf.fence.wires.len());
    for (w, &charge) in cf.fence.wires.iter().zip(&cf.charges) {
        bands.push(Band::new(rank[&w.x0], rank[&w.x1], charge, n)?);
    }
    Ok(BandRepresentation::new(n, bands)?)
}

/// True iff the fence is an embedded closed 1-manifold: wire endpoints sit
/// exactly on post endpoints, one per endpoint, and no post is a point.
pub fn is_annular(f: &Fence) -> bool {
    for p in f.posts() {
        if p.y0 == p.y1 {
            return false;
        }
    }
    let mut ends: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for p in f.posts() {
        ends.insert((p.x, p.y0), 0);
        ends.insert((p.x, p.y1), 0);
    }
    for w in f.wires() {
        for x in [w.x0, w.x1] {
            match ends.get_mut(&(x, w.y)) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
    }
    ends.values().all(|&c| c == 1)
}

/// One traversal step along a strand of the fence graph.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Walk {
    PostUp(usize),
    PostDown(usize),
    WireRight(usize),
    WireLeft(usize),
}

struct Trace {
    mate: Vec<Dart>,
    flags: Vec<bool>,
    free_loops: usize,
    n_circles: usize,
    post_comp: Vec<usize>,
    wire_comp: Vec<usize>,
}

/// Walks the annular fence as a union of circles, recording the induced
/// combinatorial map. At a crossing the wire passes over the post; a post
/// traversed upward enters port 0 and exits port 2, a wire traversed
/// rightward enters port 1 and exits port 3.
fn trace(f: &Fence) -> Result<Trace, FenceError> {
    if !is_annular(f) {
        return Err(FenceError::NotAnnular);
    }
    let posts = f.posts();
    let wires = f.wires();
    // Crossings, plus per-strand orderings along the traversal direction.
    let mut by_post: Vec<Vec<(i64, usize)>> = vec![Vec::new(); posts.len()];
    let mut by_wire: Vec<Vec<(i64, usize)>> = vec![Vec::new(); wires.len()];
    let mut n_crossings = 0usize;
    for (wi, w) in wires.iter().enumerate() {
        for (pi, p) in posts.iter().enumerate() {
            if p.x > w.x0 && p.x < w.x1 && w.y > p.y0 && w.y < p.y1 {
                by_post[pi].push((w.y, n_crossings));
                by_wire[wi].push((p.x, n_crossings));
                n_crossings += 1;
            }
        }
    }
    for list in by_post.iter_mut().chain(by_wire.iter_mut()) {
        list.sort_unstable();
    }
    // Attachments: for each post end, the unique wire ending there.
    let wire_at_y: BTreeMap<i64, usize> =
        wires.iter().enumerate().map(|(k, w)| (w.y, k)).collect();
    let attach = |p: &Post, y: i64| -> Result<usize, FenceError> {
        wire_at_y
            .get(&y)
            .copied()
            .filter(|&wi| wires[wi].x0 == p.x || wires[wi].x1 == p.x)
            .ok_or_else(|| FenceError::Invalid(format!("unattached post end at ({}, {y})", p.x)))
    };

    let mut mate = vec![u32::MAX; 4 * n_crossings];
    let mut flags = vec![false; 4 * n_crossings];
    let mut post_comp = vec![usize::MAX; posts.len()];
    let mut wire_comp = vec![usize::MAX; wires.len()];
    let mut n_circles = 0usize;
    let mut free_loops = 0usize;

    for start in 0..posts.len() {
        if post_comp[start] != usize::MAX {
            continue;
        }
        let circle = n_circles;
        n_circles += 1;
        let mut darts: Vec<(Dart, Dart)> = Vec::new();
        let mut step = Walk::PostUp(start);
        loop {
            match step {
                Walk::PostUp(pi) | Walk::PostDown(pi) => post_comp[pi] = circle,
                Walk::WireRight(wi) | Walk::WireLeft(wi) => wire_comp[wi] = circle,
            }
            // Ports crossed while traversing the current strand.
            match step {
                Walk::PostUp(pi) => {
                    for &(_, c) in &by_post[pi] {
                        darts.push((dart(c, 0), dart(c, 2)));
                    }
                }
                Walk::PostDown(pi) => {
                    for &(_, c) in by_post[pi].iter().rev() {
                        darts.push((dart(c, 2), dart(c, 0)));
                    }
                }
                Walk::WireRight(wi) => {
                    for &(_, c) in &by_wire[wi] {
                        darts.push((dart(c, 1), dart(c, 3)));
                    }
                }
                Walk::WireLeft(wi) => {
                    for &(_, c) in by_wire[wi].iter().rev() {
                        darts.push((dart(c, 3), dart(c, 1)));
                    }
                }
            }
            // Turn the corner at the far end.
            step = match step {
                Walk::PostUp(pi) => {
                    let p = &posts[pi];
                    let wi = attach(p, p.y1)?;
                    if wires[wi].x0 == p.x {
                        Walk::WireRight(wi)
                    } else {
                        Walk::WireLeft(wi)
                    }
                }
                Walk::PostDown(pi) => {
                    let p = &posts[pi];
                    let wi = attach(p, p.y0)?;
                    if wires[wi].x0 == p.x {
                        Walk::WireRight(wi)
                    } else {
                        Walk::WireLeft(wi)
                    }
                }
                Walk::WireRight(wi) => {
                    let w = &wires[wi];
                    let pi = posts.binary_search_by_key(&w.x1, |p| p.x).map_err(|_| {
                        FenceError::Invalid("wire end misses every post".into())
                    })?;
                    if posts[pi].y0 == w.y {
                        Walk::PostUp(pi)
                    } else {
                        Walk::PostDown(pi)
                    }
                }
                Walk::WireLeft(wi) => {
                    let w = &wires[wi];
                    let pi = posts.binary_search_by_key(&w.x0, |p| p.x).map_err(|_| {
                        FenceError::Invalid("wire end misses every post".into())
                    })?;
                    if posts[pi].y0 == w.y {
                        Walk::PostUp(pi)
                    } else {
                        Walk::PostDown(pi)
                    }
                }
            };
            if step == Walk::PostUp(start) {
                break;
            }
        }
        if darts.is_empty() {
            free_loops += 1;
            continue;
        }
        for k in 0..darts.len() {
            let (_, exit) = darts[k];
            let (entry, _) = darts[(k + 1) % darts.len()];
            mate[exit as usize] = entry;
            mate[entry as usize] = exit;
            flags[entry as usize] = true;
        }
    }
    debug_assert!(mate.iter().all(|&d| d != u32::MAX));
    Ok(Trace { mate, flags, free_loops, n_circles, post_comp, wire_comp })
}

/// The unoriented link diagram drawn by an annular fence, every wire passing
/// over every post it crosses.
pub fn fence_to_diagram(f: &Fence) -> Result<LinkDiagram, FenceError> {
    let t = trace(f)?;
    Ok(LinkDiagram::from_mates(t.mate, t.free_loops)?)
}

/// Component count and labeling of an annular fence.
pub fn fence_graph_components(f: &Fence) -> Result<FenceComponents, FenceError> {
    let t = trace(f)?;
    Ok(FenceComponents { count: t.n_circles, post_comp: t.post_comp, wire_comp: t.wire_comp })
}

/// Writhe of the diagram of a one-component annular fence. Orientation
/// cancels in every self-crossing sign, so the traversal direction is
/// immaterial.
pub fn fence_writhe(f: &Fence) -> Result<i64, FenceError> {
    let t = trace(f)?;
    if t.n_circles != 1 {
        return Err(FenceError::MultiComponent(t.n_circles));
    }
    if t.mate.is_empty() {
        return Ok(0);
    }
    let d = LinkDiagram::from_mates(t.mate, t.free_loops)?.with_orientation(t.flags)?;
    Ok(d.writhe()?)
}

/// Count of upper-right corners (wire right end on a post top) of an
/// annular fence; equals the count of lower-left corners.
pub fn fence_m(f: &Fence) -> Result<usize, FenceError> {
    if !is_annular(f) {
        return Err(FenceError::NotAnnular);
    }
    let wire_at_y: BTreeMap<i64, &Wire> = f.wires().iter().map(|w| (w.y, w)).collect();
    let mut maxima = 0usize;
    let mut minima = 0usize;
    for p in f.posts() {
        if let Some(w) = wire_at_y.get(&p.y1) {
            if w.x1 == p.x {
                maxima += 1;
            }
        }
        if let Some(w) = wire_at_y.get(&p.y0) {
            if w.x0 == p.x {
                minima += 1;
            }
        }
    }
    assert_eq!(maxima, minima, "corner extrema of an annular fence must pair up");
    Ok(maxima)
}

/// Live strand of the sweep: the segment it currently runs along.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Seg {
    P(usize),
    W(usize),
}

#[derive(Clone, Copy)]
enum Ev {
    Min(usize, usize),
    Max(usize, usize),
    Pass(Seg, Seg),
    Cross(usize, usize),
}

/// Presents an annular fence as a positive plat. The diagonal `x + y`
/// sweeps the fence bottom-up; corners become cups, caps, or direction
/// changes and each wire/post crossing becomes one positive letter. Cups
/// enter parked adjacent columns on the left and caps retire to the right,
/// each routed past live strands by pairs of positive letters, so both plat
/// plans come out as the matching of neighbours (1 2)(3 4)….
pub fn fence_to_positive_plat(f: &Fence) -> Result<Plat, FenceError> {
    if !is_annular(f) {
        return Err(FenceError::NotAnnular);
    }
    let posts = f.posts();
    let wires = f.wires();
    let wire_at_y: BTreeMap<i64, usize> =
        wires.iter().enumerate().map(|(k, w)| (w.y, k)).collect();

    let mut events: Vec<(i64, i64, Ev)> = Vec::new();
    for (pi, p) in posts.iter().enumerate() {
        for (end_y, is_top) in [(p.y0, false), (p.y1, true)] {
            let wi = wire_at_y
                .get(&end_y)
                .copied()
                .filter(|&wi| wires[wi].x0 == p.x || wires[wi].x1 == p.x)
                .ok_or_else(|| {
                    FenceError::Invalid(format!("unattached post end at ({}, {end_y})", p.x))
                })?;
            let at_right_end = wires[wi].x1 == p.x;
            let ev = match (is_top, at_right_end) {
                (true, true) => Ev::Max(wi, pi),
                (true, false) => Ev::Pass(Seg::P(pi), Seg::W(wi)),
                (false, false) => Ev::Min(wi, pi),
                (false, true) => Ev::Pass(Seg::W(wi), Seg::P(pi)),
            };
            events.push((p.x + end_y, end_y - p.x, ev));
        }
    }
    for (wi, w) in wires.iter().enumerate() {
        for (pi, p) in posts.iter().enumerate() {
            if p.x > w.x0 && p.x < w.x1 && w.y > p.y0 && w.y < p.y1 {
                events.push((p.x + w.y, w.y - p.x, Ev::Cross(wi, pi)));
            }
        }
    }
    events.sort_by_key(|&(eta, xi, _)| (eta, xi));

    let m = events
        .iter()
        .filter(|(_, _, ev)| matches!(ev, Ev::Max(..)))
        .count();
    if m == 0 {
        return Err(FenceError::Invalid("annular fence without corner extrema".into()));
    }
    let strands = 2 * m;

    let xi_at = |seg: Seg, eta: i64| -> i64 {
        match seg {
            Seg::P(pi) => eta - 2 * posts[pi].x,
            Seg::W(wi) => 2 * wires[wi].y - eta,
        }
    };
    let find = |live: &[Seg], seg: Seg| -> Result<usize, FenceError> {
        live.iter()
            .position(|&s| s == seg)
            .ok_or_else(|| FenceError::Invalid("sweep lost a strand".into()))
    };
    // Moves the adjacent pair at 1-based positions (q, q+1) one step right,
    // past the strand at q+2, with the passed strand crossing over both.
    let shift_right = |letters: &mut Vec<i32>, ub: usize, q: usize| {
        letters.push((ub + q + 1) as i32);
        letters.push((ub + q) as i32);
    };

    let mut live: Vec<Seg> = Vec::new();
    let mut unborn = m;
    let mut dead = 0usize;
    let mut letters: Vec<i32> = Vec::new();
    for &(eta, xi, ev) in &events {
        match ev {
            Ev::Min(wi, pi) => {
                let pos = live.iter().filter(|&&s| xi_at(s, eta) < xi).count();
                unborn -= 1;
                let ub = 2 * unborn;
                for q in 1..=pos {
                    shift_right(&mut letters, ub, q);
                }
                live.insert(pos, Seg::W(wi));
                live.insert(pos + 1, Seg::P(pi));
            }
            Ev::Max(wi, pi) => {
                let t = find(&live, Seg::P(pi))?;
                if live.get(t + 1) != Some(&Seg::W(wi)) {
                    return Err(FenceError::Invalid("cap strands are not adjacent".into()));
                }
                let ub = 2 * unborn;
                for q in (t + 1)..=live.len().saturating_sub(2) {
                    shift_right(&mut letters, ub, q);
                }
                live.drain(t..t + 2);
                dead += 2;
                debug_assert_eq!(2 * unborn + live.len() + dead, strands);
            }
            Ev::Pass(from, to) => {
                let t = find(&live, from)?;
                live[t] = to;
            }
            Ev::Cross(wi, pi) => {
                let t = find(&live, Seg::P(pi))?;
                if live.get(t + 1) != Some(&Seg::W(wi)) {
                    return Err(FenceError::Invalid("crossing strands are not adjacent".into()));
                }
                letters.push((2 * unborn + t + 1) as i32);
                live.swap(t, t + 1);
            }
        }
    }
    if !live.is_empty() || unborn != 0 {
        return Err(FenceError::Invalid("sweep did not close every strand".into()));
    }

    let word = BraidWord::new(strands, letters)?;
    let half = PlatHalf::new((0..m).map(|k| (2 * k + 1, 2 * k + 2)).collect(), strands)?;
    let plan = PlatPlan::new(strands, half.clone(), half)?;
    Ok(Plat::new(word, plan)?)
}

/// Base-coordinate piece emitted by the plat staircase.
#[derive(Clone, Copy)]
struct RawPost {
    x: i64,
    y0: i64,
    y1: i64,
}

#[derive(Clone, Copy)]
struct RawWire {
    y: i64,
    x0: i64,
    x1: i64,
}

/// Draws a positive plat as an annular fence. Plat position `i` at sweep
/// row `r` sits at `(r - i, r + i)`; a holding strand staircases northeast,
/// a letter becomes one wire-over-post crossing, and wide cups/caps are
/// staged as a unit corner plus single-column drifts through empty columns.
pub fn plat_to_fence(plat: &Plat) -> Result<Fence, FenceError> {
    if !plat.word.is_positive() {
        return Err(FenceError::Invalid("plat word must be positive".into()));
    }
    let n = plat.plan.n;
    let m = n / 2;

    let mut raw_posts: Vec<RawPost> = Vec::new();
    let mut raw_wires: Vec<RawWire> = Vec::new();
    let mut occupied = vec![false; n + 2];
    let mut row: i64 = 0;

    let hold = |posts: &mut Vec<RawPost>, wires: &mut Vec<RawWire>, r: i64, i: i64| {
        posts.push(RawPost { x: r - i, y0: r + i, y1: r + i + 1 });
        wires.push(RawWire { y: r + i + 1, x0: r - i, x1: r + 1 - i });
    };
    let hold_others = |posts: &mut Vec<RawPost>,
                       wires: &mut Vec<RawWire>,
                       occ: &[bool],
                       r: i64,
                       skip: &[usize]| {
        for (i, &on) in occ.iter().enumerate() {
            if on && !skip.contains(&i) {
                hold(posts, wires, r, i as i64);
            }
        }
    };
    // A drift moves the strand at column i into the empty column i+1.
    let drift = |posts: &mut Vec<RawPost>, r: i64, i: i64| {
        posts.push(RawPost { x: r - i, y0: r + i, y1: r + i + 2 });
    };

    let mut bottom: Vec<(usize, usize)> = plat.plan.bottom.pairs().to_vec();
    bottom.sort_by_key(|&(a, b)| (std::cmp::Reverse(b - a), a));
    for &(a, b) in &bottom {
        let (r, ai) = (row, a as i64);
        raw_posts.push(RawPost { x: r + 1 - (ai + 1), y0: r + 1 + ai, y1: r + 1 + ai + 1 });
        raw_wires.push(RawWire { y: r + 1 + ai, x0: r + 1 - (ai + 1), x1: r + 1 - ai });
        hold_others(&mut raw_posts, &mut raw_wires, &occupied, r, &[]);
        occupied[a] = true;
        occupied[a + 1] = true;
        row += 1;
        for i in (a + 1)..b {
            drift(&mut raw_posts, row, i as i64);
            occupied[i] = false;
            occupied[i + 1] = true;
            hold_others(&mut raw_posts, &mut raw_wires, &occupied, row, &[i + 1]);
            row += 1;
        }
    }

    for &letter in plat.word.letters() {
        let c = letter as usize;
        if !(occupied[c] && occupied[c + 1]) {
            return Err(FenceError::Invalid(format!("letter {c} acts on unborn strands")));
        }
        let (r, ci) = (row, c as i64);
        raw_posts.push(RawPost { x: r - ci, y0: r + ci, y1: r + ci + 2 });
        raw_wires.push(RawWire { y: r + ci + 1, x0: r - ci - 1, x1: r - ci + 1 });
        hold_others(&mut raw_posts, &mut raw_wires, &occupied, r, &[c, c + 1]);
        row += 1;
    }

    let mut top: Vec<(usize, usize)> = plat.plan.top.pairs().to_vec();
    top.sort_by_key(|&(a, b)| (b - a, a));
    for &(a, b) in &top {
        for i in a..(b - 1) {
            drift(&mut raw_posts, row, i as i64);
            occupied[i] = false;
            occupied[i + 1] = true;
            hold_others(&mut raw_posts, &mut raw_wires, &occupied, row, &[i + 1]);
            row += 1;
        }
        let (r, bi) = (row, b as i64);
        raw_posts.push(RawPost { x: r - (bi - 1), y0: r + bi - 1, y1: r + bi });
        raw_wires.push(RawWire { y: r + bi, x0: r - bi, x1: r - (bi - 1) });
        occupied[b - 1] = false;
        occupied[b] = false;
        hold_others(&mut raw_posts, &mut raw_wires, &occupied, r, &[]);
        row += 1;
    }
    if occupied.iter().any(|&on| on) {
        return Err(FenceError::Invalid("plat plan left strands uncapped".into()));
    }

    // Merge collinear touching pieces; junctions are private to one strand.
    raw_posts.sort_by_key(|p| (p.x, p.y0));
    let mut posts_m: Vec<RawPost> = Vec::new();
    for p in raw_posts {
        match posts_m.last_mut() {
            Some(q) if q.x == p.x && q.y1 == p.y0 => q.y1 = p.y1,
            _ => posts_m.push(p),
        }
    }
    raw_wires.sort_by_key(|w| (w.y, w.x0));
    let mut wires_m: Vec<RawWire> = Vec::new();
    for w in raw_wires {
        match wires_m.last_mut() {
            Some(v) if v.y == w.y && v.x1 == w.x0 => v.x1 = w.x1,
            _ => wires_m.push(w),
        }
    }

    // Separate coincident coordinates: scale up, then give every piece its
    // own offset. Crossings and attachments have base margin ≥ 1, offsets
    // stay below BIG/4, so no incidence is created or destroyed.
    let big = 4 * (posts_m.len() + wires_m.len() + 2) as i64;
    let post_x = |k: usize| posts_m[k].x * big + k as i64 + 1;
    let wire_y = |k: usize| wires_m[k].y * big + k as i64 + 1;

    let find_post = |x: i64, y: i64| -> Result<usize, FenceError> {
        let mut hit = None;
        for (k, p) in posts_m.iter().enumerate() {
            if p.x == x && (p.y0 == y || p.y1 == y) {
                if hit.is_some() {
                    return Err(FenceError::Invalid("ambiguous corner junction".into()));
                }
                hit = Some(k);
            }
        }
        hit.ok_or_else(|| FenceError::Invalid(format!("dangling wire end at ({x}, {y})")))
    };
    let find_wire = |x: i64, y: i64| -> Result<usize, FenceError> {
        let mut hit = None;
        for (k, w) in wires_m.iter().enumerate() {
            if w.y == y && (w.x0 == x || w.x1 == x) {
                if hit.is_some() {
                    return Err(FenceError::Invalid("ambiguous corner junction".into()));
                }
                hit = Some(k);
            }
        }
        hit.ok_or_else(|| FenceError::Invalid(format!("dangling post end at ({x}, {y})")))
    };

    let mut posts = Vec::with_capacity(posts_m.len());
    for (k, p) in posts_m.iter().enumerate() {
        let w0 = find_wire(p.x, p.y0)?;
        let w1 = find_wire(p.x, p.y1)?;
        posts.push(Post { x: post_x(k), y0: wire_y(w0), y1: wire_y(w1) });
    }
    let mut wires = Vec::with_capacity(wires_m.len());
    for (k, w) in wires_m.iter().enumerate() {
        let p0 = find_post(w.x0, w.y)?;
        let p1 = find_post(w.x1, w.y)?;
        wires.push(Wire { x0: post_x(p0), x1: post_x(p1), y: wire_y(k) });
    }

    let fence = Fence::new(posts, wires)?.renumbered();
    if !is_annular(&fence) {
        return Err(FenceError::Invalid("staircase fence failed to close up".into()));
    }
    if fence_m(&fence)? != m {
        return Err(FenceError::Invalid("staircase fence has the wrong corner count".into()));
    }
    Ok(fence)
}

/// Connected sum along fences: the rightmost post of each summand is
/// identified with the leftmost post of the next, the identified post is
/// deleted, and the wire pairs meeting its two endpoints merge into single
/// wires. Writhes add and the corner counts satisfy m = Σmᵢ − (k−1).
pub fn fence_connected_sum(fs: &[Fence]) -> Result<Fence, FenceError> {
    let mut iter = fs.iter();
    let first = iter
        .next()
        .ok_or_else(|| FenceError::Invalid("empty connected sum".into()))?;
    check_one_component(first)?;
    let mut acc = first.clone();
    for f in iter {
        check_one_component(f)?;
        acc = sum2(&acc, f)?;
    }
    Ok(acc.renumbered())
}

fn check_one_component(f: &Fence) -> Result<(), FenceError> {
    let t = trace(f)?;
    if t.n_circles != 1 {
        return Err(FenceError::MultiComponent(t.n_circles));
    }
    Ok(())
}

fn sum2(f1: &Fence, f2: &Fence) -> Result<Fence, FenceError> {
    let p1 = *f1.posts().last().expect("validated fence has posts");
    let p2 = f2.posts()[0];
    let (a, b) = (p1.y0, p1.y1);
    let (c, d) = (p2.y0, p2.y1);
    let (s1, s2) = (b - a, d - c);

    // The rightmost post is attached from the left and vice versa.
    let boundary_wire = |f: &Fence, y: i64, x: i64, from_left: bool| -> Result<usize, FenceError> {
        f.wires()
            .iter()
            .position(|w| w.y == y && if from_left { w.x1 == x } else { w.x0 == x })
            .ok_or_else(|| FenceError::Invalid("summand boundary post is not a corner".into()))
    };
    let top1 = boundary_wire(f1, b, p1.x, true)?;
    let bot1 = boundary_wire(f1, a, p1.x, true)?;
    let top2 = boundary_wire(f2, d, p2.x, false)?;
    let bot2 = boundary_wire(f2, c, p2.x, false)?;

    let big = 4 * (f1.wires().len() + f2.wires().len() + 2) as i64;
    let y1map = |y: i64| y * s2 * big;
    let y2base = |y: i64| (a * s2 + (y - c) * s1) * big;
    let xshift = p1.x + 1 - p2.x;

    // f2 attachment lookup for rebuilding its post intervals exactly.
    let f2_wire_y = |k: usize| {
        let off = if k == top2 || k == bot2 { 0 } else { k as i64 + 1 };
        y2base(f2.wires()[k].y) + off
    };
    let f2_attach = |p: &Post, y: i64| -> Result<usize, FenceError> {
        f2.wires()
            .iter()
            .position(|w| w.y == y && (w.x0 == p.x || w.x1 == p.x))
            .ok_or_else(|| FenceError::Invalid("summand is not annular at a post end".into()))
    };

    let mut posts: Vec<Post> = Vec::new();
    for p in &f1.posts()[..f1.posts().len() - 1] {
        posts.push(Post { x: p.x, y0: y1map(p.y0), y1: y1map(p.y1) });
    }
    for p in &f2.posts()[1..] {
        let w0 = f2_attach(p, p.y0)?;
        let w1 = f2_attach(p, p.y1)?;
        posts.push(Post { x: p.x + xshift, y0: f2_wire_y(w0), y1: f2_wire_y(w1) });
    }

    let mut wires: Vec<Wire> = Vec::new();
    for (k, w) in f1.wires().iter().enumerate() {
        if k != top1 && k != bot1 {
            wires.push(Wire { x0: w.x0, x1: w.x1, y: y1map(w.y) });
        }
    }
    for (k, w) in f2.wires().iter().enumerate() {
        if k != top2 && k != bot2 {
            wires.push(Wire { x0: w.x0 + xshift, x1: w.x1 + xshift, y: f2_wire_y(k) });
        }
    }
    debug_assert_eq!(y2base(d), y1map(b));
    wires.push(Wire {
        x0: f1.wires()[top1].x0,
        x1: f2.wires()[top2].x1 + xshift,
        y: y1map(b),
    });
    wires.push(Wire {
        x0: f1.wires()[bot1].x0,
        x1: f2.wires()[bot2].x1 + xshift,
        y: y1map(a),
    });

    let out = Fence::new(posts, wires)?;
    check_one_component(&out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{negative_torus_plat, pretzel_plat};
    use crate::braid::braid_as_plat;
    use crate::skein::SkeinEngine;

    fn square() -> Fence {
        Fence::new(
            vec![Post { x: 1, y0: 1, y1: 2 }, Post { x: 2, y0: 1, y1: 2 }],
            vec![Wire { x0: 1, x1: 2, y: 1 }, Wire { x0: 1, x1: 2, y: 2 }],
        )
        .unwrap()
    }

    fn word(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_fences() {
        let shared_x = Fence::new(
            vec![Post { x: 1, y0: 1, y1: 2 }, Post { x: 1, y0: 3, y1: 4 }],
            vec![],
        );
        assert!(shared_x.is_err());
        let dangling = Fence::new(
            vec![Post { x: 1, y0: 1, y1: 2 }],
            vec![Wire { x0: 1, x1: 2, y: 1 }],
        );
        assert!(dangling.is_err());
        let through_endpoint = Fence::new(
            vec![
                Post { x: 1, y0: 1, y1: 3 },
                Post { x: 2, y0: 2, y1: 4 },
                Post { x: 3, y0: 1, y1: 3 },
            ],
            vec![Wire { x0: 1, x1: 3, y: 2 }],
        );
        assert!(through_endpoint.is_err());
    }

    #[test]
    fn square_fence_basics() {
        let f = square();
        assert!(is_annular(&f));
        assert_eq!(fence_m(&f).unwrap(), 1);
        assert_eq!(fence_writhe(&f).unwrap(), 0);
        let comps = fence_graph_components(&f).unwrap();
        assert_eq!(comps.count, 1);
        let d = fence_to_diagram(&f).unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn mid_post_attachment_is_not_annular() {
        let f = Fence::new(
            vec![Post { x: 1, y0: 1, y1: 3 }, Post { x: 2, y0: 1, y1: 3 }],
            vec![
                Wire { x0: 1, x1: 2, y: 1 },
                Wire { x0: 1, x1: 2, y: 2 },
                Wire { x0: 1, x1: 2, y: 3 },
            ],
        )
        .unwrap();
        assert!(!is_annular(&f));
        assert!(matches!(fence_writhe(&f), Err(FenceError::NotAnnular)));
    }

    #[test]
    fn band_rep_round_trip() {
        let b = BandRepresentation::new(
            3,
            vec![
                Band::new(1, 2, 1, 3).unwrap(),
                Band::new(2, 3, -1, 3).unwrap(),
                Band::new(1, 3, 1, 3).unwrap(),
            ],
        )
        .unwrap();
        let cf = band_rep_to_fence(&b).unwrap();
        assert_eq!(cf.fence.posts().len(), 3);
        assert_eq!(cf.fence.wires().len(), 3);
        assert_eq!(cf.charges(), &[1, -1, 1]);
        assert_eq!(fence_to_band_rep(&cf).unwrap(), b);

        let empty = BandRepresentation::new(4, vec![]).unwrap();
        let cf = band_rep_to_fence(&empty).unwrap();
        assert_eq!(cf.fence.posts().len(), 4);
        assert_eq!(cf.fence.wires().len(), 0);
        assert_eq!(fence_to_band_rep(&cf).unwrap(), empty);
    }

    #[test]
    fn annular_band_rep_yields_annular_fence() {
        // Every strand used exactly twice: the bands trace one cycle.
        let b = BandRepresentation::new(
            3,
            vec![
                Band::new(1, 2, 1, 3).unwrap(),
                Band::new(2, 3, 1, 3).unwrap(),
                Band::new(1, 3, 1, 3).unwrap(),
            ],
        )
        .unwrap();
        let cf = band_rep_to_fence(&b).unwrap();
        assert!(is_annular(&cf.fence));
        assert_eq!(fence_graph_components(&cf.fence).unwrap().count, 1);
    }

    #[test]
    fn two_squares_have_two_components() {
        let f = Fence::new(
            vec![
                Post { x: 1, y0: 1, y1: 2 },
                Post { x: 2, y0: 1, y1: 2 },
                Post { x: 3, y0: 3, y1: 4 },
                Post { x: 4, y0: 3, y1: 4 },
            ],
            vec![
                Wire { x0: 1, x1: 2, y: 1 },
                Wire { x0: 1, x1: 2, y: 2 },
                Wire { x0: 3, x1: 4, y: 3 },
                Wire { x0: 3, x1: 4, y: 4 },
            ],
        )
        .unwrap();
        let comps = fence_graph_components(&f).unwrap();
        assert_eq!(comps.count, 2);
        assert_eq!(comps.post_comp, vec![0, 0, 1, 1]);
        assert!(matches!(fence_writhe(&f), Err(FenceError::MultiComponent(2))));
    }

    #[test]
    fn square_fence_gives_empty_plat() {
        let plat = fence_to_positive_plat(&square()).unwrap();
        assert_eq!(plat.word.strands(), 2);
        assert!(plat.word.letters().is_empty());
    }

    #[test]
    fn unknot_plat_gives_square_fence() {
        let half = PlatHalf::new(vec![(1, 2)], 2).unwrap();
        let plan = PlatPlan::new(2, half.clone(), half).unwrap();
        let plat = Plat::new(word(2, &[]), plan).unwrap();
        let f = plat_to_fence(&plat).unwrap();
        assert_eq!(f, square());
    }

    #[test]
    fn negative_torus_fence_calibration() {
        // O{2,−3} as a positive plat: writhe −3 and three corners.
        let plat = negative_torus_plat(3);
        let f = plat_to_fence(&plat).unwrap();
        assert!(is_annular(&f));
        assert_eq!(fence_graph_components(&f).unwrap().count, 1);
        assert_eq!(fence_writhe(&f).unwrap(), -3);
        assert_eq!(fence_m(&f).unwrap(), 3);
        let d = fence_to_diagram(&f).unwrap();
        assert_eq!(d.n_crossings(), 3);

        let eng = SkeinEngine::new();
        let from_fence = eng.r_poly(&d).unwrap();
        let from_plat = eng.r_poly(&plat.diagram()).unwrap();
        let from_closure = eng
            .r_poly(&crate::braid::closed_braid_diagram(&word(2, &[-1, -1, -1])))
            .unwrap();
        assert_eq!(from_fence, from_plat);
        assert_eq!(from_fence, from_closure);
    }

    #[test]
    fn positive_trefoil_fence_from_braid() {
        let plat = braid_as_plat(&word(2, &[1, 1, 1]));
        let f = plat_to_fence(&plat).unwrap();
        assert_eq!(fence_writhe(&f).unwrap(), 3);
        assert_eq!(fence_m(&f).unwrap(), 2);
        let eng = SkeinEngine::new();
        assert_eq!(
            eng.r_poly(&fence_to_diagram(&f).unwrap()).unwrap(),
            eng.r_poly(&crate::braid::closed_braid_diagram(&word(2, &[1, 1, 1]))).unwrap()
        );
    }

    #[test]
    fn pretzel_fence_matches_granny_sum() {
        let plat = pretzel_plat(3, 3, 0);
        let f = plat_to_fence(&plat).unwrap();
        assert!(is_annular(&f));
        assert_eq!(fence_writhe(&f).unwrap(), 6);
        assert_eq!(fence_m(&f).unwrap(), 3);

        let tref = plat_to_fence(&braid_as_plat(&word(2, &[1, 1, 1]))).unwrap();
        let granny = fence_connected_sum(&[tref.clone(), tref]).unwrap();
        assert_eq!(fence_writhe(&granny).unwrap(), 6);
        assert_eq!(fence_m(&granny).unwrap(), 3);

        let eng = SkeinEngine::new();
        let r_pretzel = eng.r_poly(&fence_to_diagram(&f).unwrap()).unwrap();
        let r_granny = eng.r_poly(&fence_to_diagram(&granny).unwrap()).unwrap();
        assert_eq!(r_pretzel, r_granny);
    }

    #[test]
    fn pretzel_fence_writhe_law() {
        for (r, s, t) in [(1, 1, 2), (3, 1, 0), (3, 3, 2), (5, 3, 4)] {
            let f = plat_to_fence(&pretzel_plat(r, s, t)).unwrap();
            assert_eq!(fence_writhe(&f).unwrap(), (r + s) as i64 - t as i64,
                "pretzel ({r},{s},{t})");
        }
    }

    // R is an invariant of oriented links; the canonical orientations picked
    // for two diagrams of the same link need not agree beyond one component,
    // so the round-trip oracle sticks to knots.
    #[test]
    fn sweep_round_trip_preserves_r() {
        let eng = SkeinEngine::new();
        let samples: Vec<Plat> = vec![
            negative_torus_plat(5),
            pretzel_plat(3, 1, 2),
            pretzel_plat(5, 3, 4),
            braid_as_plat(&word(3, &[1, 1, 1, 2])),
        ];
        for plat in samples {
            let f = plat_to_fence(&plat).unwrap();
            let back = fence_to_positive_plat(&f).unwrap();
            assert!(back.word.is_positive());
            assert_eq!(back.word.strands(), 2 * fence_m(&f).unwrap());
            let r_fence = eng.r_poly(&fence_to_diagram(&f).unwrap()).unwrap();
            let r_back = eng.r_poly(&back.diagram().simplify().diagram).unwrap();
            assert_eq!(r_fence, r_back);
        }
    }

    #[test]
    fn connected_sum_with_square_is_neutral() {
        let tref = plat_to_fence(&braid_as_plat(&word(2, &[1, 1, 1]))).unwrap();
        let sum = fence_connected_sum(&[tref.clone(), square()]).unwrap();
        assert_eq!(fence_writhe(&sum).unwrap(), fence_writhe(&tref).unwrap());
        assert_eq!(fence_m(&sum).unwrap(), fence_m(&tref).unwrap());
        let eng = SkeinEngine::new();
        assert_eq!(
            eng.r_poly(&fence_to_diagram(&sum).unwrap()).unwrap(),
            eng.r_poly(&fence_to_diagram(&tref).unwrap()).unwrap()
        );
    }

    #[test]
    fn charged_fence_json_round_trip() {
        let b = BandRepresentation::new(
            3,
            vec![Band::new(1, 2, 1, 3).unwrap(), Band::new(2, 3, -1, 3).unwrap()],
        )
        .unwrap();
        let cf = band_rep_to_fence(&b).unwrap();
        let json = cf.to_json_string();
        let back = ChargedFence::from_json_str(&json).unwrap();
        assert_eq!(back, cf);
        assert_eq!(back.to_json_string(), json);
    }
}
