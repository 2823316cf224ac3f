//! Planar link-diagram calculus on a combinatorial map.
//!
//! A diagram with `n` crossings is stored as a fixed-point-free involution
//! `mate` on the `4n` darts (edge-ends). Dart `4c+s` is port `s` of crossing
//! `c`; ports are numbered counterclockwise with the under-strand occupying
//! ports {0,2} and the over-strand ports {1,3}. Crossingless components are
//! not embedded anywhere; they are carried as a bare `free_loops` count,
//! which is sound because every invariant computed here treats a crossingless
//! component as a split unknot.
//!
//! Orientation, when present, is a per-dart "incoming" flag: `true` means the
//! strand arrives at the crossing through that dart. A crossing is positive
//! exactly when its over-strand arrival port is one counterclockwise step
//! after its under-strand arrival port.

mod cable;
mod code;
mod pd;

use std::collections::BTreeSet;
use std::fmt;

/// Index of a dart (edge-end). Dart `4c+s` is port `s` of crossing `c`.
pub type Dart = u32;

/// Errors from diagram construction and surgery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("operation requires an oriented diagram")]
    NotOriented,
    #[error("crossing {0} out of range")]
    BadCrossing(usize),
    #[error("component {0} out of range")]
    BadComponent(usize),
    #[error("linking number requires two distinct components")]
    SameComponent,
    #[error("expected a knot diagram, found {0} components")]
    NotAKnot(usize),
    #[error("invalid PD text: {0}")]
    Pd(String),
}

/// Case split of §1.4: a crossing involves one component or two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingCase {
    /// Both strands belong to one component; payload `p` is the linking
    /// number, in the oriented smoothing, of the component containing the
    /// strand that left through the under-exit with everything else.
    Case1 { p: i64 },
    /// The strands belong to two components; payload `q` is the linking
    /// number of the under-strand's component with the rest of the link.
    Case2 { q: i64 },
}

/// Component structure of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Curve-component id for every dart; components are numbered by their
    /// minimal dart, so the labeling is canonical.
    pub dart_comp: Vec<u32>,
    /// Number of components that pass through at least one crossing.
    pub n_curve: usize,
    /// Number of crossingless circles; their component ids follow the curve
    /// components, i.e. they are `n_curve .. n_curve + n_loops`.
    pub n_loops: usize,
}

impl Components {
    pub fn total(&self) -> usize {
        self.n_curve + self.n_loops
    }
}

/// Result of `simplify`: the reduced diagram plus the signed count of
/// first-Reidemeister kinks that were removed (needed by regular-isotopy
/// invariants, which pick up a factor per kink).
#[derive(Debug, Clone)]
pub struct Simplified {
    pub diagram: LinkDiagram,
    pub curls: i64,
}

pub(crate) struct Splice {
    pub diagram: LinkDiagram,
    /// Old dart -> new dart for darts of surviving crossings.
    pub dart_map: Vec<Option<Dart>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    mate: Vec<Dart>,
    free_loops: usize,
    orientation: Option<Vec<bool>>,
}

#[inline]
pub(crate) fn crossing_of(d: Dart) -> usize {
    (d / 4) as usize
}

#[inline]
pub(crate) fn slot_of(d: Dart) -> u8 {
    (d % 4) as u8
}

#[inline]
pub(crate) fn dart(c: usize, s: u8) -> Dart {
    (c as u32) * 4 + s as u32
}

/// The opposite port on the same strand through the crossing.
#[inline]
pub(crate) fn through(d: Dart) -> Dart {
    d ^ 2
}

impl LinkDiagram {
    /// A crossingless diagram of `loops` split circles.
    pub fn unlink(loops: usize) -> Self {
        LinkDiagram { mate: Vec::new(), free_loops: loops, orientation: None }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Builds a diagram from an explicit mate involution.
    pub fn from_mates(mate: Vec<Dart>, free_loops: usize) -> Result<Self, DiagramError> {
        if !mate.len().is_multiple_of(4) {
            return Err(DiagramError::Invalid("dart count not divisible by 4".into()));
        }
        for (d, &m) in mate.iter().enumerate() {
            let d = d as Dart;
            if m as usize >= mate.len() {
                return Err(DiagramError::Invalid(format!("mate of dart {d} out of range")));
            }
            if m == d {
                return Err(DiagramError::Invalid(format!("dart {d} is its own mate")));
            }
            if mate[m as usize] != d {
                return Err(DiagramError::Invalid(format!("mate is not an involution at dart {d}")));
            }
        }
        Ok(LinkDiagram { mate, free_loops, orientation: None })
    }

    pub fn n_crossings(&self) -> usize {
        self.mate.len() / 4
    }

    pub fn n_darts(&self) -> usize {
        self.mate.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub(crate) fn with_free_loops(mut self, loops: usize) -> Self {
        self.free_loops = loops;
        self
    }

    pub fn mate(&self, d: Dart) -> Dart {
        self.mate[d as usize]
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// `true` iff the strand arrives at the crossing through dart `d`.
    /// Panics if the diagram is unoriented.
    pub fn is_incoming(&self, d: Dart) -> bool {
        self.orientation.as_ref().expect("oriented diagram")[d as usize]
    }

    /// The next arrival dart along the strand through arrival dart `d`.
    #[inline]
    pub fn next_arrival(&self, d: Dart) -> Dart {
        self.mate(through(d))
    }

    pub fn forget_orientation(mut self) -> Self {
        self.orientation = None;
        self
    }

    /// Installs explicit incoming flags after validating coherence: along
    /// every edge exactly one end is incoming, and each strand runs through
    /// each crossing (in one port, out the opposite port).
    pub fn with_orientation(mut self, flags: Vec<bool>) -> Result<Self, DiagramError> {
        if flags.len() != self.mate.len() {
            return Err(DiagramError::Invalid("orientation flag count mismatch".into()));
        }
        for d in 0..self.mate.len() {
            let dd = d as Dart;
            if flags[d] == flags[self.mate(dd) as usize] {
                return Err(DiagramError::Invalid(format!(
                    "edge at dart {d} is not oriented end-to-end"
                )));
            }
            if flags[d] == flags[through(dd) as usize] {
                return Err(DiagramError::Invalid(format!(
                    "strand through dart {d} does not pass through the crossing"
                )));
            }
        }
        self.orientation = Some(flags);
        Ok(self)
    }

    /// Orients every component so that its minimal dart is an arrival.
    pub fn orient_canonically(&self) -> Self {
        let mut flags = vec![false; self.mate.len()];
        let mut seen = vec![false; self.mate.len()];
        for d0 in 0..self.mate.len() as Dart {
            if seen[d0 as usize] {
                continue;
            }
            let mut d = d0;
            loop {
                seen[d as usize] = true;
                seen[through(d) as usize] = true;
                flags[d as usize] = true;
                flags[through(d) as usize] = false;
                d = self.next_arrival(d);
                if d == d0 {
                    break;
                }
            }
        }
        let mut out = self.clone();
        out.orientation = Some(flags);
        out
    }

    /// Ensures some orientation is present (canonical if absent).
    pub fn oriented(&self) -> Self {
        if self.is_oriented() {
            self.clone()
        } else {
            self.orient_canonically()
        }
    }

    pub fn reverse_component(&self, comp: usize) -> Result<Self, DiagramError> {
        let flags = self.orientation.as_ref().ok_or(DiagramError::NotOriented)?;
        let comps = self.components();
        if comp >= comps.total() {
            return Err(DiagramError::BadComponent(comp));
        }
        let mut flags = flags.clone();
        if comp < comps.n_curve {
            for (d, f) in flags.iter_mut().enumerate() {
                if comps.dart_comp[d] == comp as u32 {
                    *f = !*f;
                }
            }
        }
        let mut out = self.clone();
        out.orientation = Some(flags);
        Ok(out)
    }

    pub fn reverse_all(&self) -> Result<Self, DiagramError> {
        let flags = self.orientation.as_ref().ok_or(DiagramError::NotOriented)?;
        let mut out = self.clone();
        out.orientation = Some(flags.iter().map(|f| !f).collect());
        Ok(out)
    }

    /// Curve components (dart orbits under edge- and strand-adjacency),
    /// numbered by minimal dart, followed by the free loops.
    pub fn components(&self) -> Components {
        let mut dart_comp = vec![u32::MAX; self.mate.len()];
        let mut n_curve = 0u32;
        for d0 in 0..self.mate.len() as Dart {
            if dart_comp[d0 as usize] != u32::MAX {
                continue;
            }
            let mut stack = vec![d0];
            while let Some(d) = stack.pop() {
                if dart_comp[d as usize] != u32::MAX {
                    continue;
                }
                dart_comp[d as usize] = n_curve;
                stack.push(self.mate(d));
                stack.push(through(d));
            }
            n_curve += 1;
        }
        Components { dart_comp, n_curve: n_curve as usize, n_loops: self.free_loops }
    }

    /// The sign (+1/−1) of crossing `c`; requires orientation.
    pub fn sign(&self, c: usize) -> Result<i8, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::BadCrossing(c));
        }
        if !self.is_oriented() {
            return Err(DiagramError::NotOriented);
        }
        let u = if self.is_incoming(dart(c, 0)) { 0u8 } else { 2 };
        let o = if self.is_incoming(dart(c, 1)) { 1u8 } else { 3 };
        Ok(if (o + 4 - u) % 4 == 1 { 1 } else { -1 })
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        let mut w = 0i64;
        for c in 0..self.n_crossings() {
            w += self.sign(c)? as i64;
        }
        Ok(w)
    }

    /// Sum of signs of the crossings where the component crosses itself.
    pub fn self_writhe(&self, comp: usize, comps: &Components) -> Result<i64, DiagramError> {
        let mut w = 0i64;
        for c in 0..self.n_crossings() {
            let under = comps.dart_comp[dart(c, 0) as usize] as usize;
            let over = comps.dart_comp[dart(c, 1) as usize] as usize;
            if under == comp && over == comp {
                w += self.sign(c)? as i64;
            }
        }
        Ok(w)
    }

    /// Linking number of two distinct components: half the signed count of
    /// their mutual crossings.
    pub fn linking_number(&self, a: usize, b: usize) -> Result<i64, DiagramError> {
        if a == b {
            return Err(DiagramError::SameComponent);
        }
        let comps = self.components();
        if a >= comps.total() || b >= comps.total() {
            return Err(DiagramError::BadComponent(a.max(b)));
        }
        let mut twice = 0i64;
        for c in 0..self.n_crossings() {
            let under = comps.dart_comp[dart(c, 0) as usize] as usize;
            let over = comps.dart_comp[dart(c, 1) as usize] as usize;
            if (under == a && over == b) || (under == b && over == a) {
                twice += self.sign(c)? as i64;
            }
        }
        debug_assert!(twice % 2 == 0, "mixed crossing signs must pair up");
        Ok(twice / 2)
    }

    /// τ(L) = Σ_{i<j} link(K_i, K_j).
    pub fn total_linking(&self) -> Result<i64, DiagramError> {
        let comps = self.components();
        let mut tau = 0i64;
        for c in 0..self.n_crossings() {
            let under = comps.dart_comp[dart(c, 0) as usize];
            let over = comps.dart_comp[dart(c, 1) as usize];
            if under != over {
                tau += self.sign(c)? as i64;
            }
        }
        debug_assert!(tau % 2 == 0);
        Ok(tau / 2)
    }

    /// Switches over- and under-strand at crossing `c` by rotating its ports
    /// one counterclockwise step. Dart labels at all other crossings are
    /// untouched, so traversal basepoints stay valid across a switch.
    pub fn switch_crossing(&self, c: usize) -> Result<Self, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::BadCrossing(c));
        }
        let rho = |d: Dart| -> Dart {
            if crossing_of(d) == c {
                dart(c, (slot_of(d) + 1) % 4)
            } else {
                d
            }
        };
        let mut mate = vec![0; self.mate.len()];
        for d in 0..self.mate.len() as Dart {
            mate[rho(d) as usize] = rho(self.mate(d));
        }
        let orientation = self.orientation.as_ref().map(|flags| {
            let mut out = flags.clone();
            for s in 0..4u8 {
                out[dart(c, (s + 1) % 4) as usize] = flags[dart(c, s) as usize];
            }
            out
        });
        Ok(LinkDiagram { mate, free_loops: self.free_loops, orientation })
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in 0..self.n_crossings() {
            d = d.switch_crossing(c).expect("crossing in range");
        }
        d
    }

    /// Core surgery: removes the crossings named in `pairings`, rewiring each
    /// one's ports along the given internal port-pairs. Ports left out of the
    /// pairing are dead ends: chains reaching them are discarded (used when
    /// deleting whole components). Closed chains that never touch a surviving
    /// crossing become free loops.
    pub(crate) fn splice(&self, pairings: &[(usize, Vec<(u8, u8)>)]) -> Splice {
        let n = self.n_crossings();
        let mut removed = vec![false; n];
        let mut partner: Vec<Option<Dart>> = vec![None; self.mate.len()];
        for (c, pairs) in pairings {
            removed[*c] = true;
            for &(a, b) in pairs {
                partner[dart(*c, a) as usize] = Some(dart(*c, b));
                partner[dart(*c, b) as usize] = Some(dart(*c, a));
            }
        }

        let mut new_id = vec![usize::MAX; n];
        let mut kept = 0usize;
        for c in 0..n {
            if !removed[c] {
                new_id[c] = kept;
                kept += 1;
            }
        }
        let mut dart_map: Vec<Option<Dart>> = vec![None; self.mate.len()];
        for d in 0..self.mate.len() as Dart {
            let c = crossing_of(d);
            if !removed[c] {
                dart_map[d as usize] = Some(dart(new_id[c], slot_of(d)));
            }
        }

        let mut mate = vec![Dart::MAX; kept * 4];
        let mut orientation = self.orientation.as_ref().map(|_| vec![false; kept * 4]);
        let mut chain_visited = vec![false; self.mate.len()];
        for d in 0..self.mate.len() as Dart {
            let Some(nd) = dart_map[d as usize] else { continue };
            if mate[nd as usize] != Dart::MAX {
                continue;
            }
            let mut cur = self.mate(d);
            while removed[crossing_of(cur)] {
                chain_visited[cur as usize] = true;
                let p = partner[cur as usize]
                    .expect("surviving strand ran into an unpaired port");
                chain_visited[p as usize] = true;
                cur = self.mate(p);
            }
            let nc = dart_map[cur as usize].expect("chain ends at surviving crossing");
            mate[nd as usize] = nc;
            mate[nc as usize] = nd;
            if let (Some(out_flags), Some(in_flags)) = (&mut orientation, &self.orientation) {
                out_flags[nd as usize] = in_flags[d as usize];
                out_flags[nc as usize] = in_flags[cur as usize];
            }
        }

        // Closed chains entirely inside the removed region are circles.
        let mut loops = self.free_loops;
        for d0 in 0..self.mate.len() as Dart {
            if partner[d0 as usize].is_none() || chain_visited[d0 as usize] {
                continue;
            }
            let mut cur = d0;
            loop {
                chain_visited[cur as usize] = true;
                let p = partner[cur as usize].expect("cycle stays on paired ports");
                chain_visited[p as usize] = true;
                cur = self.mate(p);
                if cur == d0 {
                    break;
                }
                // A chain from an internal port either cycles back or was
                // already consumed by a surviving-strand walk above; if it
                // reaches an unpaired port it belongs to a deleted strand.
                if partner[cur as usize].is_none() {
                    break;
                }
            }
            if cur == d0 {
                loops += 1;
            }
        }

        let diagram = LinkDiagram { mate, free_loops: loops, orientation };
        Splice { diagram, dart_map }
    }

    /// Oriented smoothing L₀ at crossing `c` (Fig. 5): reconnects respecting
    /// orientation and drops the crossing.
    pub fn smooth_oriented(&self, c: usize) -> Result<Self, DiagramError> {
        let sign = self.sign(c)?;
        let pairs = if sign > 0 {
            vec![(0, 3), (1, 2)]
        } else {
            vec![(0, 1), (2, 3)]
        };
        Ok(self.splice(&[(c, pairs)]).diagram)
    }

    /// The smoothing of `c` that is incompatible with the orientation (L_∞ of
    /// Fig. 6). The result is unoriented.
    pub fn smooth_unoriented(&self, c: usize) -> Result<Self, DiagramError> {
        let sign = self.sign(c)?;
        let pairs = if sign > 0 {
            vec![(0, 1), (2, 3)]
        } else {
            vec![(0, 3), (1, 2)]
        };
        Ok(self.splice(&[(c, pairs)]).diagram.forget_orientation())
    }

    /// Both unoriented smoothings at `c`, for semi-oriented skein relations.
    pub fn smoothings_unoriented(&self, c: usize) -> Result<[Self; 2], DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::BadCrossing(c));
        }
        let a = self.splice(&[(c, vec![(0, 1), (2, 3)])]).diagram.forget_orientation();
        let b = self.splice(&[(c, vec![(0, 3), (1, 2)])]).diagram.forget_orientation();
        Ok([a, b])
    }

    /// §1.4 case split at a crossing, with the auxiliary linking number.
    pub fn crossing_case(&self, c: usize) -> Result<CrossingCase, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::BadCrossing(c));
        }
        if !self.is_oriented() {
            return Err(DiagramError::NotOriented);
        }
        let comps = self.components();
        let under = comps.dart_comp[dart(c, 0) as usize] as usize;
        let over = comps.dart_comp[dart(c, 1) as usize] as usize;
        if under != over {
            let mut q = 0i64;
            for x in 0..comps.total() {
                if x != under {
                    q += self.linking_number(under, x)?;
                }
            }
            return Ok(CrossingCase::Case2 { q });
        }
        // Case 1: smooth and track the piece holding the old under-exit edge.
        let under_exit = if self.is_incoming(dart(c, 0)) { dart(c, 2) } else { dart(c, 0) };
        let probe = self.mate(under_exit);
        let sign = self.sign(c)?;
        let pairs = if sign > 0 { vec![(0, 3), (1, 2)] } else { vec![(0, 1), (2, 3)] };
        let spl = self.splice(&[(c, pairs)]);
        let l0 = spl.diagram;
        let p = match spl.dart_map[probe as usize] {
            None => 0, // the piece lost all crossings: a split circle
            Some(nd) => {
                let l0_comps = l0.components();
                let piece = l0_comps.dart_comp[nd as usize] as usize;
                let mut p = 0i64;
                for x in 0..l0_comps.total() {
                    if x != piece {
                        p += l0.linking_number(piece, x)?;
                    }
                }
                p
            }
        };
        Ok(CrossingCase::Case1 { p })
    }

    fn find_r1(&self) -> Option<(usize, i64)> {
        for c in 0..self.n_crossings() {
            for s in 0..4u8 {
                if self.mate(dart(c, s)) == dart(c, (s + 1) % 4) {
                    let curl = if s % 2 == 1 { 1 } else { -1 };
                    return Some((c, curl));
                }
            }
        }
        None
    }

    fn find_r2(&self) -> Option<(usize, usize)> {
        for c in 0..self.n_crossings() {
            for s in 0..4u8 {
                let m1 = self.mate(dart(c, s));
                let d = crossing_of(m1);
                if d == c {
                    continue;
                }
                let t = slot_of(m1);
                if self.mate(dart(c, (s + 1) % 4)) == dart(d, (t + 3) % 4) && s % 2 == t % 2 {
                    return Some((c, d));
                }
            }
        }
        None
    }

    /// Removes first-Reidemeister kinks and second-Reidemeister bigons until
    /// none remain. Components reduced to zero crossings become free loops.
    /// The signed kink count is reported so regular-isotopy invariants can
    /// restore their normalization.
    pub fn simplify(&self) -> Simplified {
        let mut d = self.clone();
        let mut curls = 0i64;
        loop {
            if let Some((c, curl)) = d.find_r1() {
                curls += curl;
                d = d.splice(&[(c, vec![(0, 2), (1, 3)])]).diagram;
                continue;
            }
            if let Some((c, e)) = d.find_r2() {
                d = d
                    .splice(&[(c, vec![(0, 2), (1, 3)]), (e, vec![(0, 2), (1, 3)])])
                    .diagram;
                continue;
            }
            break;
        }
        Simplified { diagram: d, curls }
    }

    /// Deletes the named components (curve components and/or free loops).
    pub fn delete_components(&self, remove: &BTreeSet<usize>) -> Result<Self, DiagramError> {
        let comps = self.components();
        for &r in remove {
            if r >= comps.total() {
                return Err(DiagramError::BadComponent(r));
            }
        }
        let removed_loops = remove.iter().filter(|&&r| r >= comps.n_curve).count();
        let curve_gone: Vec<bool> = (0..comps.n_curve).map(|i| remove.contains(&i)).collect();
        let mut pairings: Vec<(usize, Vec<(u8, u8)>)> = Vec::new();
        for c in 0..self.n_crossings() {
            let under_gone = curve_gone[comps.dart_comp[dart(c, 0) as usize] as usize];
            let over_gone = curve_gone[comps.dart_comp[dart(c, 1) as usize] as usize];
            match (under_gone, over_gone) {
                (true, true) => pairings.push((c, vec![])),
                (true, false) => pairings.push((c, vec![(1, 3)])),
                (false, true) => pairings.push((c, vec![(0, 2)])),
                (false, false) => {}
            }
        }
        let mut out = self.splice(&pairings).diagram;
        out.free_loops -= removed_loops;
        Ok(out)
    }

    /// Keeps exactly the named components.
    pub fn sublink(&self, keep: &BTreeSet<usize>) -> Result<Self, DiagramError> {
        let total = self.components().total();
        let remove: BTreeSet<usize> = (0..total).filter(|i| !keep.contains(i)).collect();
        self.delete_components(&remove)
    }

    /// Arrival darts along a component, starting from arrival dart `start`.
    pub(crate) fn arrival_cycle(&self, start: Dart) -> Vec<Dart> {
        let mut out = Vec::new();
        let mut d = start;
        loop {
            out.push(d);
            d = self.next_arrival(d);
            if d == start {
                break;
            }
        }
        out
    }

    /// Canonical traversal basepoints: for each curve component (in canonical
    /// order) the smallest arrival dart. Requires orientation.
    pub fn canonical_starts(&self) -> Result<Vec<Dart>, DiagramError> {
        let flags = self.orientation.as_ref().ok_or(DiagramError::NotOriented)?;
        let comps = self.components();
        let mut starts = vec![Dart::MAX; comps.n_curve];
        for d in 0..self.mate.len() as Dart {
            if flags[d as usize] {
                let c = comps.dart_comp[d as usize] as usize;
                if starts[c] == Dart::MAX {
                    starts[c] = d; // darts scanned ascending, components by min dart
                }
            }
        }
        Ok(starts)
    }

    /// The crossings met on the under-strand before the over-strand when the
    /// components are traversed from `starts` in order, listed in first-visit
    /// order. An empty answer means the diagram is descending.
    pub fn bad_crossings(&self, starts: &[Dart]) -> Result<Vec<usize>, DiagramError> {
        if !self.is_oriented() && self.n_crossings() > 0 {
            return Err(DiagramError::NotOriented);
        }
        let mut seen = vec![false; self.n_crossings()];
        let mut bad = Vec::new();
        for &s in starts {
            for d in self.arrival_cycle(s) {
                let c = crossing_of(d);
                if !seen[c] {
                    seen[c] = true;
                    if slot_of(d).is_multiple_of(2) {
                        bad.push(c);
                    }
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s), "starts must cover every crossing");
        Ok(bad)
    }

    /// True iff traversing the components in order from the given basepoints
    /// meets every crossing first on the over-strand; such a diagram is an
    /// unlink of `components().total()` circles.
    pub fn is_unlink_descending(&self, starts: &[Dart]) -> Result<bool, DiagramError> {
        Ok(self.bad_crossings(starts)?.is_empty())
    }

    /// Splits the diagram into crossing-connected pieces: two curve
    /// components share a piece iff some crossing chain joins them. Returns
    /// the pieces as separate diagrams (free loops excluded: the caller gets
    /// them from `free_loops`). An empty result means no crossings at all.
    pub fn split_pieces(&self) -> Vec<LinkDiagram> {
        let n = self.n_crossings();
        if n == 0 {
            return Vec::new();
        }
        let comps = self.components();
        // Union curve components that meet at a crossing.
        let mut parent: Vec<usize> = (0..comps.n_curve).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in 0..n {
            let a = comps.dart_comp[dart(c, 0) as usize] as usize;
            let b = comps.dart_comp[dart(c, 1) as usize] as usize;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut piece_of_comp = vec![usize::MAX; comps.n_curve];
        for (i, slot) in piece_of_comp.iter_mut().enumerate() {
            let r = find(&mut parent, i);
            let pid = match roots.iter().position(|&x| x == r) {
                Some(p) => p,
                None => {
                    roots.push(r);
                    roots.len() - 1
                }
            };
            *slot = pid;
        }
        if roots.len() == 1 {
            let mut one = self.clone();
            one.free_loops = 0;
            return vec![one];
        }
        let mut out = Vec::new();
        for pid in 0..roots.len() {
            let keep: BTreeSet<usize> = (0..comps.n_curve)
                .filter(|&i| piece_of_comp[i] == pid)
                .collect();
            let piece = self
                .sublink(&keep)
                .expect("piece indices valid")
                .with_free_loops(0);
            out.push(piece);
        }
        out
    }

    /// Disjoint union: crossings, darts, and free loops of `other` appended
    /// after those of `self`. The result is oriented iff both inputs are.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.n_darts() as Dart;
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|&m| m + off));
        let orientation = match (&self.orientation, &other.orientation) {
            (Some(a), Some(b)) => {
                let mut flags = a.clone();
                flags.extend_from_slice(b);
                Some(flags)
            }
            _ => None,
        };
        LinkDiagram {
            mate,
            free_loops: self.free_loops + other.free_loops,
            orientation,
        }
    }
}

/// A link diagram together with an integer framing per component, listed in
/// the diagram's component order (curve components first, then free loops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedDiagram {
    pub diagram: LinkDiagram,
    pub framing: Vec<i64>,
}

impl FramedDiagram {
    pub fn new(diagram: LinkDiagram, framing: Vec<i64>) -> Result<Self, DiagramError> {
        let total = diagram.components().total();
        if framing.len() != total {
            return Err(DiagramError::Invalid(format!(
                "framing lists {} components, diagram has {total}",
                framing.len()
            )));
        }
        Ok(FramedDiagram { diagram, framing })
    }

    /// The zero framing on every component.
    pub fn zero_framed(diagram: LinkDiagram) -> Self {
        let total = diagram.components().total();
        FramedDiagram {
            diagram,
            framing: vec![0; total],
        }
    }

    /// Total framing: the sum of the per-component framings.
    pub fn total_framing(&self) -> i64 {
        self.framing.iter().sum()
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinkDiagram {{ crossings: {}, loops: {}, oriented: {}, mate: {:?} }}",
            self.n_crossings(),
            self.free_loops,
            self.is_oriented(),
            self.mate
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{BraidWord, closed_braid_diagram};

    fn trefoil() -> LinkDiagram {
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap())
    }

    fn hopf() -> LinkDiagram {
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap())
    }

    #[test]
    fn unknot_closure_of_single_letter() {
        let d = closed_braid_diagram(&BraidWord::new(2, vec![1]).unwrap());
        assert_eq!(d.n_crossings(), 1);
        let comps = d.components();
        assert_eq!(comps.total(), 1);
        assert_eq!(d.writhe().unwrap(), 1);
        let s = d.simplify();
        assert_eq!(s.diagram.n_crossings(), 0);
        assert_eq!(s.diagram.free_loops(), 1);
        assert_eq!(s.curls, 1);
    }

    #[test]
    fn component_counts() {
        assert_eq!(trefoil().components().total(), 1);
        assert_eq!(hopf().components().total(), 2);
        let sigma1_in_b3 = closed_braid_diagram(&BraidWord::new(3, vec![1]).unwrap());
        assert_eq!(sigma1_in_b3.components().total(), 2); // untouched strand closes up
        assert_eq!(sigma1_in_b3.free_loops(), 1);
    }

    #[test]
    fn writhe_of_positive_closures_is_exponent_sum() {
        for word in [vec![1, 1, 1], vec![1, 2, 1, 2], vec![2, 1, 1, 2, 1]] {
            let n = 3;
            let w = BraidWord::new(n, word.clone()).unwrap();
            let d = closed_braid_diagram(&w);
            assert_eq!(d.writhe().unwrap(), word.len() as i64);
        }
    }

    #[test]
    fn mirror_negates_writhe() {
        let d = trefoil();
        assert_eq!(d.writhe().unwrap(), 3);
        assert_eq!(d.mirror().writhe().unwrap(), -3);
    }

    #[test]
    fn hopf_linking_number() {
        let d = hopf();
        assert_eq!(d.linking_number(0, 1).unwrap(), 1);
        assert_eq!(d.total_linking().unwrap(), 1);
        let r = d.reverse_component(1).unwrap();
        assert_eq!(r.linking_number(0, 1).unwrap(), -1);
        let rr = d.reverse_all().unwrap();
        assert_eq!(rr.linking_number(0, 1).unwrap(), 1);
        assert_eq!(d.linking_number(0, 0), Err(DiagramError::SameComponent));
    }

    #[test]
    fn switch_flips_one_sign() {
        let d = trefoil();
        let s = d.switch_crossing(1).unwrap();
        assert_eq!(s.writhe().unwrap(), 1);
        let ss = s.switch_crossing(1).unwrap();
        assert_eq!(ss.writhe().unwrap(), 3);
        // Double switch returns the same diagram up to relabeling.
        assert_eq!(
            ss.canonical_code().unwrap(),
            d.canonical_code().unwrap()
        );
    }

    #[test]
    fn switched_negative_word_closure_cancels() {
        // σ1 σ1⁻¹ closure: an R2 pair over two components.
        let d = closed_braid_diagram(&BraidWord::new(2, vec![1, -1]).unwrap());
        assert_eq!(d.writhe().unwrap(), 0);
        let s = d.simplify();
        assert_eq!(s.diagram.n_crossings(), 0);
        assert_eq!(s.diagram.free_loops(), 2);
        assert_eq!(s.curls, 0);
    }

    #[test]
    fn smoothing_trefoil_gives_hopf() {
        let d = trefoil();
        let l0 = d.smooth_oriented(0).unwrap();
        assert_eq!(l0.n_crossings(), 2);
        assert_eq!(l0.components().total(), 2);
        assert_eq!(l0.linking_number(0, 1).unwrap(), 1);
        // Oriented smoothing at a self-crossing changes component count by 1.
        assert_eq!(d.components().total() + 1, l0.components().total());
    }

    #[test]
    fn crossing_cases() {
        let kink = closed_braid_diagram(&BraidWord::new(2, vec![1]).unwrap());
        assert_eq!(kink.crossing_case(0).unwrap(), CrossingCase::Case1 { p: 0 });
        let h = hopf();
        assert_eq!(h.crossing_case(0).unwrap(), CrossingCase::Case2 { q: 1 });
        let t = trefoil();
        assert_eq!(t.crossing_case(1).unwrap(), CrossingCase::Case1 { p: 1 });
    }

    #[test]
    fn descending_checks() {
        let unlink = LinkDiagram::unlink(2);
        assert!(unlink.is_unlink_descending(&[]).unwrap());

        let kink = closed_braid_diagram(&BraidWord::new(2, vec![1]).unwrap())
            .orient_canonically();
        let starts = kink.canonical_starts().unwrap();
        // One of the two basepoints sees the crossing over-first.
        let any: bool = kink
            .arrival_cycle(starts[0])
            .into_iter()
            .any(|s| kink.is_unlink_descending(&[s]).unwrap());
        assert!(any);

        let t = trefoil();
        let comps = t.components();
        assert_eq!(comps.n_curve, 1);
        for d in 0..t.n_darts() as Dart {
            if t.is_incoming(d) {
                assert!(!t.is_unlink_descending(&[d]).unwrap());
            }
        }
    }

    #[test]
    fn simplify_preserves_writhe_data() {
        // R2 pair inside a knot: σ1 σ2 σ2⁻¹ σ1 closure = σ1² closure.
        let d = closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap());
        let e = closed_braid_diagram(&BraidWord::new(3, vec![1, 2, -2, 1]).unwrap());
        let es = e.simplify();
        assert_eq!(es.curls, 0);
        assert_eq!(es.diagram.writhe().unwrap(), d.writhe().unwrap());
        assert_eq!(
            es.diagram.components().total(),
            e.components().total()
        );
    }

    #[test]
    fn delete_component_of_hopf() {
        let h = hopf();
        let only = h.delete_components(&BTreeSet::from([1])).unwrap();
        assert_eq!(only.n_crossings(), 0);
        assert_eq!(only.free_loops(), 1);
        let none = h.sublink(&BTreeSet::from([0, 1])).unwrap();
        assert_eq!(none.n_crossings(), 2);
    }

    #[test]
    fn split_pieces_of_disjoint_union() {
        // Two split trefoils via braid in B_5 using letters 1 and 4... the
        // closure of σ1³σ4³ in B_5 is a split union of two trefoils.
        let d = closed_braid_diagram(&BraidWord::new(5, vec![1, 1, 1, 4, 4, 4]).unwrap());
        let pieces = d.split_pieces();
        assert_eq!(pieces.len(), 2);
        for p in &pieces {
            assert_eq!(p.n_crossings(), 3);
            assert_eq!(p.components().total(), 1);
        }
        assert_eq!(trefoil().split_pieces().len(), 1);
    }
}
