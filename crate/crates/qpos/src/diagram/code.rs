//! Canonical byte encoding of diagrams.
//!
//! The code is a signed Gauss code serialized per arrival: a first visit to a
//! crossing emits `0x80 | over`, a revisit emits `0x40 | rot` followed by the
//! crossing's visit index, and components are separated by `0xFE`. The `rot`
//! bit records whether the second arrival port is one counterclockwise step
//! after the first (this is the crossing's local chirality, which together
//! with the over/under bit pins the diagram up to isomorphism). The canonical
//! code is the lexicographic minimum over every choice of component order and
//! basepoint — and, for unoriented diagrams, every per-component direction;
//! for oriented diagrams only the simultaneous reversal of all components is
//! allowed, so that the code identifies exactly the oriented isomorphism
//! class. The search is exponential in the component count, which is fine at
//! the intended scale; hot paths use `quick_code`, a single fixed traversal
//! whose equality still implies isomorphism.

use super::{crossing_of, dart, slot_of, through, Dart, DiagramError, LinkDiagram};

const FIRST_VISIT: u8 = 0x80;
const REVISIT: u8 = 0x40;
const SEPARATOR: u8 = 0xFE;
const WIDE_INDEX: u8 = 0xFF;

fn push_index(out: &mut Vec<u8>, idx: usize) {
    if idx < WIDE_INDEX as usize {
        out.push(idx as u8);
    } else {
        out.push(WIDE_INDEX);
        out.extend_from_slice(&(idx as u16).to_le_bytes());
    }
}

fn header(oriented: bool, free_loops: usize) -> Vec<u8> {
    let mut out = vec![u8::from(oriented)];
    out.extend_from_slice(&(free_loops as u32).to_le_bytes());
    out
}

struct Encoder<'a> {
    d: &'a LinkDiagram,
    flags: &'a [bool],
    /// Visit index and first-arrival slot per crossing; `u32::MAX` = unseen.
    idx: Vec<u32>,
    first_slot: Vec<u8>,
    counter: u32,
    buf: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl<'a> Encoder<'a> {
    fn new(d: &'a LinkDiagram, flags: &'a [bool], prefix: Vec<u8>) -> Self {
        let n = d.n_crossings();
        Encoder {
            d,
            flags,
            idx: vec![u32::MAX; n],
            first_slot: vec![0; n],
            counter: 0,
            buf: prefix,
            best: None,
        }
    }

    /// Appends one component's bytes starting from arrival dart `start`.
    /// Returns the crossings newly indexed (for rollback) or `None` if the
    /// buffer went lexicographically above the best known code.
    fn emit_component(&mut self, start: Dart) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let mut cur = start;
        loop {
            let c = crossing_of(cur);
            if self.idx[c] == u32::MAX {
                self.idx[c] = self.counter;
                self.first_slot[c] = slot_of(cur);
                self.counter += 1;
                assigned.push(c);
                self.buf.push(FIRST_VISIT | (slot_of(cur) % 2));
            } else {
                let rot = (slot_of(cur) + 4 - self.first_slot[c]) % 4 == 1;
                self.buf.push(REVISIT | u8::from(rot));
                push_index(&mut self.buf, self.idx[c] as usize);
            }
            if self.above_best() {
                self.rollback(&assigned);
                return None;
            }
            cur = next_arrival_with(self.d, self.flags, cur);
            if cur == start {
                break;
            }
        }
        self.buf.push(SEPARATOR);
        if self.above_best() {
            self.rollback(&assigned);
            return None;
        }
        Some(assigned)
    }

    fn rollback(&mut self, assigned: &[usize]) {
        for &c in assigned {
            self.idx[c] = u32::MAX;
            self.counter -= 1;
        }
    }

    fn above_best(&self) -> bool {
        match &self.best {
            None => false,
            Some(best) => {
                let k = self.buf.len().min(best.len());
                match self.buf[..k].cmp(&best[..k]) {
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Greater => true,
                    // Equal prefix: if we've already run past the best code's
                    // length without being smaller, we're not better.
                    std::cmp::Ordering::Equal => self.buf.len() > best.len(),
                }
            }
        }
    }

    fn search(&mut self, comp_of: &[u32], n_comps: usize, used: &mut Vec<bool>, depth: usize) {
        if depth == n_comps {
            let better = match &self.best {
                None => true,
                Some(best) => self.buf < *best,
            };
            if better {
                self.best = Some(self.buf.clone());
            }
            return;
        }
        for comp in 0..n_comps {
            if used[comp] {
                continue;
            }
            for d in 0..self.d.n_darts() as Dart {
                if comp_of[d as usize] as usize != comp || !self.flags[d as usize] {
                    continue;
                }
                let len_before = self.buf.len();
                if let Some(assigned) = self.emit_component(d) {
                    used[comp] = true;
                    self.search(comp_of, n_comps, used, depth + 1);
                    used[comp] = false;
                    self.rollback(&assigned);
                }
                self.buf.truncate(len_before);
            }
        }
    }
}

/// `next_arrival` under explicit flags (the diagram's stored orientation may
/// differ from the candidate orientation being tried).
fn next_arrival_with(d: &LinkDiagram, flags: &[bool], arrival: Dart) -> Dart {
    let out = through(arrival);
    debug_assert!(flags[arrival as usize] && !flags[out as usize]);
    d.mate(out)
}

/// One deterministic traversal under the given flags: canonical component
/// order, minimal arrival basepoints. Used for fast memo keys and by the PD
/// writer through `canonical_traversal`.
fn encode_fixed(d: &LinkDiagram, flags: &[bool], starts: &[Dart], prefix: Vec<u8>) -> Vec<u8> {
    let mut enc = Encoder::new(d, flags, prefix);
    for &s in starts {
        enc.emit_component(s).expect("no best bound set");
    }
    enc.buf
}

fn flip_components(flags: &[bool], comp_of: &[u32], mask: u32) -> Vec<bool> {
    flags
        .iter()
        .enumerate()
        .map(|(i, &f)| f ^ ((mask >> comp_of[i]) & 1 == 1))
        .collect()
}

impl LinkDiagram {
    /// Encoding invariant under relabeling: equal codes iff the diagrams are
    /// isomorphic (as oriented diagrams when oriented, up to reversing all
    /// components at once; as unoriented diagrams otherwise).
    pub fn canonical_code(&self) -> Result<Vec<u8>, DiagramError> {
        let (flags, starts) = self.canonical_traversal()?;
        Ok(encode_fixed(
            self,
            &flags,
            &starts,
            header(self.is_oriented(), self.free_loops),
        ))
    }

    /// The winning traversal behind `canonical_code`: orientation flags and
    /// per-component starting darts, in traversal order. Label-independent:
    /// isomorphic diagrams yield structurally identical traversals.
    pub(crate) fn canonical_traversal(&self) -> Result<(Vec<bool>, Vec<Dart>), DiagramError> {
        let comps = self.components();
        if comps.n_curve == 0 {
            return Ok((Vec::new(), Vec::new()));
        }
        if comps.n_curve > 16 {
            return Err(DiagramError::Invalid(
                "canonical encoding supports at most 16 curve components".into(),
            ));
        }
        let base = self.oriented();
        let base_flags = base.orientation.clone().expect("oriented");
        let candidates: Vec<Vec<bool>> = if self.is_oriented() {
            vec![
                base_flags.clone(),
                base_flags.iter().map(|f| !f).collect(),
            ]
        } else {
            (0..(1u32 << comps.n_curve))
                .map(|mask| flip_components(&base_flags, &comps.dart_comp, mask))
                .collect()
        };

        let mut best: Option<(Vec<u8>, Vec<bool>, Vec<Dart>)> = None;
        for flags in candidates {
            let mut enc = Encoder::new(self, &flags, Vec::new());
            enc.best = best.as_ref().map(|(b, _, _)| b.clone());
            let had_best = enc.best.is_some();
            let mut used = vec![false; comps.n_curve];
            enc.search(&comps.dart_comp, comps.n_curve, &mut used, 0);
            if let Some(code) = enc.best {
                let improved = !had_best
                    || best.as_ref().map(|(b, _, _)| code < *b).unwrap_or(true);
                if improved {
                    let starts = recover_starts(self, &flags, &code);
                    best = Some((code, flags, starts));
                }
            }
        }
        let (_, flags, starts) = best.expect("at least one candidate succeeds");
        Ok((flags, starts))
    }

    /// Fast deterministic key: a single traversal of the stored (or
    /// canonical) orientation from canonical basepoints. Equal keys still
    /// imply isomorphic diagrams, so this is sound for memoization; it merely
    /// misses some hits that the full canonical code would collapse.
    pub(crate) fn quick_code(&self) -> Vec<u8> {
        let base = self.oriented();
        let flags = base.orientation.clone().expect("oriented");
        let starts = base.canonical_starts().expect("oriented");
        encode_fixed(
            self,
            &flags,
            &starts,
            header(self.is_oriented(), self.free_loops),
        )
    }

    /// Rebuilds a diagram from `canonical_code` output; the result is
    /// isomorphic to the encoded diagram (and re-encodes to the same bytes).
    pub fn decode(code: &[u8]) -> Result<Self, DiagramError> {
        let bad = |m: &str| DiagramError::Invalid(format!("bad code: {m}"));
        if code.len() < 5 {
            return Err(bad("truncated header"));
        }
        let oriented = match code[0] {
            0 => false,
            1 => true,
            _ => return Err(bad("orientation byte")),
        };
        let free_loops = u32::from_le_bytes(code[1..5].try_into().unwrap()) as usize;
        let body = &code[5..];

        // First pass: count crossings (number of FIRST_VISIT bytes).
        let mut n = 0usize;
        {
            let mut i = 0;
            while i < body.len() {
                let b = body[i];
                if b == SEPARATOR {
                    i += 1;
                } else if b & 0xC0 == 0x80 {
                    n += 1;
                    i += 1;
                } else if b & 0xC0 == 0x40 {
                    i += 1;
                    if i >= body.len() {
                        return Err(bad("truncated revisit"));
                    }
                    i += if body[i] == WIDE_INDEX { 3 } else { 1 };
                } else {
                    return Err(bad("unexpected byte"));
                }
            }
        }

        let mut mate = vec![Dart::MAX; 4 * n];
        let mut flags = vec![false; 4 * n];
        let mut first_slot = vec![u8::MAX; n];
        let mut counter = 0usize;
        let mut prev: Option<Dart> = None;
        let mut first: Option<Dart> = None;
        let wire = |from: Dart, to: Dart, mate: &mut Vec<Dart>| -> Result<(), DiagramError> {
            if mate[from as usize] != Dart::MAX || mate[to as usize] != Dart::MAX {
                return Err(bad("dart wired twice"));
            }
            mate[from as usize] = to;
            mate[to as usize] = from;
            Ok(())
        };

        let mut i = 0;
        while i < body.len() {
            let b = body[i];
            let arrival: Option<Dart> = if b == SEPARATOR {
                i += 1;
                match (prev.take(), first.take()) {
                    (Some(p), Some(f)) => {
                        wire(through(p), f, &mut mate)?;
                        None
                    }
                    _ => return Err(bad("empty component")),
                }
            } else if b & 0xC0 == 0x80 {
                i += 1;
                if counter >= n {
                    return Err(bad("too many crossings"));
                }
                let slot = b & 1; // under first => slot 0, over first => slot 1
                first_slot[counter] = slot;
                let d = dart(counter, slot);
                counter += 1;
                Some(d)
            } else if b & 0xC0 == 0x40 {
                let rot = b & 1 == 1;
                i += 1;
                if i >= body.len() {
                    return Err(bad("truncated revisit"));
                }
                let idx = if body[i] == WIDE_INDEX {
                    if i + 2 >= body.len() {
                        return Err(bad("truncated wide index"));
                    }
                    let v = u16::from_le_bytes([body[i + 1], body[i + 2]]) as usize;
                    i += 3;
                    v
                } else {
                    let v = body[i] as usize;
                    i += 1;
                    v
                };
                if idx >= counter || first_slot[idx] == u8::MAX {
                    return Err(bad("revisit of unseen crossing"));
                }
                let step = if rot { 1 } else { 3 };
                Some(dart(idx, (first_slot[idx] + step) % 4))
            } else {
                return Err(bad("unexpected byte"));
            };
            if let Some(d) = arrival {
                flags[d as usize] = true;
                match prev {
                    Some(p) => wire(through(p), d, &mut mate)?,
                    None => first = Some(d),
                }
                prev = Some(d);
            }
        }
        if prev.is_some() {
            return Err(bad("missing component separator"));
        }
        if counter != n {
            return Err(bad("crossing count mismatch"));
        }
        let d = LinkDiagram::from_mates(mate, free_loops)?;
        if oriented {
            d.with_orientation(flags)
        } else {
            Ok(d)
        }
    }
}

/// Replays a code against the diagram to find which starts produce it, with
/// backtracking (prefix ties between symmetric components can diverge later).
/// The search already proved such a traversal exists.
fn recover_starts(d: &LinkDiagram, flags: &[bool], code: &[u8]) -> Vec<Dart> {
    fn dfs(
        d: &LinkDiagram,
        comps: &super::Components,
        enc: &mut Encoder,
        code: &[u8],
        used: &mut Vec<bool>,
        starts: &mut Vec<Dart>,
    ) -> bool {
        if starts.len() == comps.n_curve {
            return enc.buf == code;
        }
        for dd in 0..d.n_darts() as Dart {
            let comp = comps.dart_comp[dd as usize] as usize;
            if used[comp] || !enc.flags[dd as usize] {
                continue;
            }
            let len_before = enc.buf.len();
            if let Some(assigned) = enc.emit_component(dd) {
                if enc.buf.len() <= code.len()
                    && code[len_before..enc.buf.len()] == enc.buf[len_before..]
                {
                    used[comp] = true;
                    starts.push(dd);
                    if dfs(d, comps, enc, code, used, starts) {
                        return true;
                    }
                    starts.pop();
                    used[comp] = false;
                }
                enc.rollback(&assigned);
            }
            enc.buf.truncate(len_before);
        }
        false
    }
    let comps = d.components();
    let mut enc = Encoder::new(d, flags, Vec::new());
    let mut used = vec![false; comps.n_curve];
    let mut starts = Vec::new();
    let ok = dfs(d, &comps, &mut enc, code, &mut used, &mut starts);
    assert!(ok, "winning traversal must be reproducible");
    starts
}

#[cfg(test)]
mod tests {
    use crate::braid::{closed_braid_diagram, BraidWord};
    use crate::diagram::LinkDiagram;

    fn trefoil() -> LinkDiagram {
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap())
    }

    #[test]
    fn relabelings_share_a_code() {
        // The same knot built from cyclically rotated braid words gives
        // differently labeled but isomorphic diagrams.
        let a = closed_braid_diagram(&BraidWord::new(3, vec![1, 1, 2]).unwrap());
        let b = closed_braid_diagram(&BraidWord::new(3, vec![1, 2, 1]).unwrap());
        assert_ne!(a, b); // labels differ
        assert_eq!(a.canonical_code().unwrap(), b.canonical_code().unwrap());
    }

    #[test]
    fn mirror_gets_a_different_code() {
        let t = trefoil();
        assert_ne!(
            t.canonical_code().unwrap(),
            t.mirror().canonical_code().unwrap()
        );
        // Unoriented codes distinguish them too.
        assert_ne!(
            t.clone().forget_orientation().canonical_code().unwrap(),
            t.mirror().forget_orientation().canonical_code().unwrap()
        );
    }

    #[test]
    fn decode_round_trips() {
        for d in [
            trefoil(),
            closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap()),
            closed_braid_diagram(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap()),
            LinkDiagram::unlink(3),
            trefoil().forget_orientation(),
        ] {
            let code = d.canonical_code().unwrap();
            let back = LinkDiagram::decode(&code).unwrap();
            assert_eq!(back.canonical_code().unwrap(), code);
            assert_eq!(back.free_loops(), d.free_loops());
            assert_eq!(back.is_oriented(), d.is_oriented());
        }
    }

    #[test]
    fn global_reversal_is_identified_but_mixed_is_not() {
        // For an oriented 2-component link, reversing everything keeps the
        // code; reversing one component changes the linking number and the
        // code with it.
        let hopf = closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap());
        let all = hopf.reverse_all().unwrap();
        let one = hopf.reverse_component(1).unwrap();
        assert_eq!(
            hopf.canonical_code().unwrap(),
            all.canonical_code().unwrap()
        );
        assert_ne!(
            hopf.canonical_code().unwrap(),
            one.canonical_code().unwrap()
        );
        // Unoriented codes identify all of these.
        assert_eq!(
            hopf.forget_orientation().canonical_code().unwrap(),
            one.forget_orientation().canonical_code().unwrap()
        );
    }

    #[test]
    fn quick_code_is_stable_and_distinguishing() {
        let t = trefoil();
        assert_eq!(t.quick_code(), t.quick_code());
        assert_ne!(t.quick_code(), t.mirror().quick_code());
    }
}
