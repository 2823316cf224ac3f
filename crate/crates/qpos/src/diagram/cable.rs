//! Annulus boundaries (2-cables) and connected sums.
//!
//! `two_cable_boundary` builds a diagram of ∂A(K,f): the blackboard
//! 2-parallel of the knot diagram with the parallel copy reversed (each
//! crossing becomes a 2×2 block of four), plus |f−w| clasps of two crossings
//! each to correct the framing from the blackboard value w = writhe to f.
//! `cable_boundary_components` is the link version: one annulus per
//! component, each with its own framing and clasp chain. The defining
//! property link(∂₁ᵢ,∂₂ᵢ) = −fᵢ is asserted on the result.

use super::{
    crossing_of, dart, slot_of, through, Components, Dart, DiagramError, FramedDiagram,
    LinkDiagram,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Copy {
    /// Sub-line on the walker's left when entering a crossing (follows the
    /// original orientation).
    A,
    /// The reversed parallel copy.
    B,
}

/// Block layout per original crossing `c`: the under-strand doubles into two
/// horizontal lines, the over-strand into two vertical ones, meeting in four
/// crossings NW/NE/SW/SE (ids 4c+0..4c+3) that keep the slot convention.
const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

fn subport(d: Dart, copy: Copy) -> Dart {
    let c = crossing_of(d);
    let (block, slot) = match (slot_of(d), copy) {
        (0, Copy::A) => (NW, 0),
        (0, Copy::B) => (SW, 0),
        (1, Copy::A) => (SW, 1),
        (1, Copy::B) => (SE, 1),
        (2, Copy::A) => (SE, 2),
        (2, Copy::B) => (NE, 2),
        (3, Copy::A) => (NE, 3),
        (3, Copy::B) => (NW, 3),
        _ => unreachable!("slot in 0..4"),
    };
    dart(4 * c + block, slot as u8)
}

struct Wiring {
    mate: Vec<Dart>,
}

impl Wiring {
    fn new(crossings: usize) -> Self {
        Wiring { mate: vec![Dart::MAX; 4 * crossings] }
    }

    fn join(&mut self, a: Dart, b: Dart) {
        debug_assert!(self.mate[a as usize] == Dart::MAX && self.mate[b as usize] == Dart::MAX);
        self.mate[a as usize] = b;
        self.mate[b as usize] = a;
    }
}

impl LinkDiagram {
    fn require_knot(&self) -> Result<(), DiagramError> {
        let total = self.components().total();
        if total != 1 {
            return Err(DiagramError::NotAKnot(total));
        }
        Ok(())
    }

    /// Oriented diagram of ∂A(K,f) for a knot diagram of K. The result has
    /// two components with mutual linking number exactly −f (asserted).
    pub fn two_cable_boundary(&self, f: i64) -> Result<LinkDiagram, DiagramError> {
        self.require_knot()?;
        self.cable_boundary_components(&[f])
    }

    /// Oriented diagram of the boundary of A(L,f): one flat annulus per
    /// component with the parallel copy reversed, plus |fᵢ−wᵢ| clasps on
    /// component i correcting its blackboard framing (wᵢ = self-writhe) to
    /// fᵢ. Each boundary pair satisfies link(∂₁ᵢ,∂₂ᵢ) = −fᵢ (asserted).
    pub fn cable_boundary_components(
        &self,
        framings: &[i64],
    ) -> Result<LinkDiagram, DiagramError> {
        let base = self.oriented();
        let comps = base.components();
        if framings.len() != comps.total() {
            return Err(DiagramError::Invalid(format!(
                "{} framings for {} components",
                framings.len(),
                comps.total()
            )));
        }

        let mut acc: Option<LinkDiagram> = None;
        if base.n_crossings() > 0 {
            let mut twists = Vec::with_capacity(comps.n_curve);
            for (i, &f) in framings.iter().enumerate().take(comps.n_curve) {
                let w = base.self_writhe(i, &comps)?;
                twists.push((f - w).unsigned_abs() as usize);
            }
            // The clasp chain's sign convention is fixed by measurement:
            // build all-positive, flip the components whose boundary pair
            // came out with the wrong linking number, and re-check.
            let mut positive = vec![true; comps.n_curve];
            let (mut cable, mut pairs) = base.cable_multi(&comps, &twists, &positive)?;
            let mut flipped = false;
            for i in 0..comps.n_curve {
                if cable.linking_number(pairs[i].0, pairs[i].1)? != -framings[i] {
                    positive[i] = false;
                    flipped = true;
                }
            }
            if flipped {
                (cable, pairs) = base.cable_multi(&comps, &twists, &positive)?;
            }
            for i in 0..comps.n_curve {
                let lk = cable.linking_number(pairs[i].0, pairs[i].1)?;
                assert_eq!(lk, -framings[i], "cable framing invariant");
            }
            acc = Some(cable);
        }

        // A free loop bounds a flat annulus; |f| clasps close its boundary
        // into a (2, ±2f) torus-link diagram, disjoint from the rest.
        for l in 0..comps.n_loops {
            let f = framings[comps.n_curve + l];
            let loop_cable = if f == 0 {
                LinkDiagram::unlink(2).oriented()
            } else {
                let letter = if f > 0 { 1 } else { -1 };
                let word =
                    crate::braid::BraidWord::new(2, vec![letter; 2 * f.unsigned_abs() as usize])
                        .expect("valid 2-strand word");
                let d = crate::braid::closed_braid_diagram(&word).reverse_component(1)?;
                let lk = d.linking_number(0, 1)?;
                assert_eq!(lk, -f, "cable framing invariant");
                d
            };
            acc = Some(match acc {
                Some(a) => a.disjoint_union(&loop_cable),
                None => loop_cable,
            });
        }
        Ok(acc.unwrap_or_else(|| LinkDiagram::unlink(0).oriented()))
    }

    fn cable_multi(
        &self,
        comps: &Components,
        twists: &[usize],
        positive: &[bool],
    ) -> Result<(LinkDiagram, Vec<(usize, usize)>), DiagramError> {
        let n = self.n_crossings();
        let n_curve = comps.n_curve;

        // Chain crossings live after the 4n block crossings, one run of
        // 2·twists[i] per curve component.
        let mut chain_at = Vec::with_capacity(n_curve);
        let mut next = 4 * n;
        for &t in twists {
            chain_at.push(next);
            next += 2 * t;
        }
        let mut wiring = Wiring::new(next);

        for c in 0..n {
            wiring.join(dart(4 * c + NW, 2), dart(4 * c + NE, 0));
            wiring.join(dart(4 * c + SW, 2), dart(4 * c + SE, 0));
            wiring.join(dart(4 * c + SW, 3), dart(4 * c + NW, 1));
            wiring.join(dart(4 * c + SE, 3), dart(4 * c + NE, 1));
        }

        // Component i's clasp chain sits on the edge at its minimal dart.
        let mut min_dart = vec![Dart::MAX; n_curve];
        for d in 0..self.n_darts() as Dart {
            let i = comps.dart_comp[d as usize] as usize;
            if min_dart[i] == Dart::MAX {
                min_dart[i] = d;
            }
        }
        let chain_of_edge = |p: Dart| -> Option<usize> {
            let i = comps.dart_comp[p as usize] as usize;
            (min_dart[i] == p && twists[i] > 0).then_some(i)
        };

        for p in 0..self.n_darts() as Dart {
            let q = self.mate(p);
            if p > q {
                continue;
            }
            if let Some(i) = chain_of_edge(p) {
                let mut left = subport(p, Copy::A);
                let mut right = subport(p, Copy::B);
                for k in 0..2 * twists[i] {
                    let z = chain_at[i] + k;
                    if positive[i] {
                        wiring.join(left, dart(z, 0));
                        wiring.join(right, dart(z, 1));
                        left = dart(z, 3);
                        right = dart(z, 2);
                    } else {
                        wiring.join(left, dart(z, 3));
                        wiring.join(right, dart(z, 0));
                        left = dart(z, 2);
                        right = dart(z, 1);
                    }
                }
                // An even chain keeps the strands on their own sides.
                wiring.join(left, subport(q, Copy::B));
                wiring.join(right, subport(q, Copy::A));
            } else {
                wiring.join(subport(p, Copy::A), subport(q, Copy::B));
                wiring.join(subport(p, Copy::B), subport(q, Copy::A));
            }
        }

        let cable = LinkDiagram::from_mates(wiring.mate, 0)?;

        // Orient by walking the two copies of each component from seeds with
        // known directions: the A-copy follows the original orientation, the
        // B-copy reverses it.
        let mut flags = vec![false; cable.n_darts()];
        let mut seeds = Vec::with_capacity(n_curve);
        for &d0 in &min_dart {
            let r: Dart = if self.is_incoming(d0) { d0 } else { through(d0) };
            let seed_a = subport(r, Copy::A);
            let b_out = subport(r, Copy::B); // B-line departs where the A-line arrives
            let seed_b = cable.mate(b_out);
            seeds.push((seed_a, seed_b));
            for seed in [seed_a, seed_b] {
                let mut d = seed;
                loop {
                    flags[d as usize] = true;
                    let out = through(d);
                    flags[out as usize] = false;
                    d = cable.mate(out);
                    if d == seed {
                        break;
                    }
                }
            }
        }
        let cable = cable.with_orientation(flags)?;
        let cc = cable.components();
        debug_assert_eq!(cc.total(), 2 * n_curve);
        let pairs = seeds
            .iter()
            .map(|&(a, b)| {
                (
                    cc.dart_comp[a as usize] as usize,
                    cc.dart_comp[b as usize] as usize,
                )
            })
            .collect();
        Ok((cable, pairs))
    }

    /// Connected sum of two knot diagrams, joined along the edges at their
    /// minimal darts; the crossing set is the disjoint union.
    pub fn connected_sum(&self, other: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
        self.require_knot()?;
        other.require_knot()?;
        if self.n_crossings() == 0 {
            return Ok(other.clone());
        }
        if other.n_crossings() == 0 {
            return Ok(self.clone());
        }
        let keep_orientation = self.is_oriented() && other.is_oriented();
        let d1 = self.oriented();
        let d2 = other.oriented();
        let off = d1.n_darts() as Dart;

        let cut = |d: &LinkDiagram| -> (Dart, Dart) {
            // (tail = departure end, head = arrival end) of the edge at dart 0
            let m = d.mate(0);
            if d.is_incoming(0) {
                (m, 0)
            } else {
                (0, m)
            }
        };
        let (t1, h1) = cut(&d1);
        let (t2, h2) = cut(&d2);

        let mut mate: Vec<Dart> = d1.mate.clone();
        mate.extend(d2.mate.iter().map(|&m| m + off));
        mate[t1 as usize] = h2 + off;
        mate[(h2 + off) as usize] = t1;
        mate[(t2 + off) as usize] = h1;
        mate[h1 as usize] = t2 + off;

        let mut flags: Vec<bool> = (0..d1.n_darts())
            .map(|i| d1.is_incoming(i as Dart))
            .collect();
        flags.extend((0..d2.n_darts()).map(|i| d2.is_incoming(i as Dart)));

        let joined = LinkDiagram::from_mates(mate, 0)?.with_orientation(flags)?;
        debug_assert_eq!(joined.components().total(), 1);
        Ok(if keep_orientation {
            joined
        } else {
            joined.forget_orientation()
        })
    }
}

impl FramedDiagram {
    /// Oriented diagram of ∂A(L,f) for this framed link.
    pub fn boundary_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        self.diagram.cable_boundary_components(&self.framing)
    }
}

#[cfg(test)]
mod tests {
    use crate::braid::{closed_braid_diagram, BraidWord};
    use crate::diagram::{DiagramError, LinkDiagram};

    fn trefoil() -> LinkDiagram {
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap())
    }

    #[test]
    fn unknot_cables() {
        let o = LinkDiagram::unknot();
        let flat = o.two_cable_boundary(0).unwrap();
        assert_eq!(flat.n_crossings(), 0);
        assert_eq!(flat.components().total(), 2);
        for f in [-3i64, -1, 1, 2] {
            let d = o.two_cable_boundary(f).unwrap();
            assert_eq!(d.n_crossings(), 2 * f.unsigned_abs() as usize);
            assert_eq!(d.components().total(), 2);
            assert_eq!(d.linking_number(0, 1).unwrap(), -f);
        }
    }

    #[test]
    fn trefoil_cable_f0() {
        let d = trefoil().two_cable_boundary(0).unwrap();
        assert_eq!(d.n_crossings(), 12 + 6); // parallel blocks + 3 clasps
        assert_eq!(d.components().total(), 2);
        assert_eq!(d.linking_number(0, 1).unwrap(), 0);
    }

    #[test]
    fn blackboard_cable_needs_no_twists() {
        let t = trefoil();
        let d = t.two_cable_boundary(3).unwrap(); // f = writhe
        assert_eq!(d.n_crossings(), 12);
        assert_eq!(d.linking_number(0, 1).unwrap(), -3);
        let m = t.mirror();
        let dm = m.two_cable_boundary(-3).unwrap();
        assert_eq!(dm.n_crossings(), 12);
        assert_eq!(dm.linking_number(0, 1).unwrap(), 3);
    }

    #[test]
    fn cable_framing_sweep() {
        let k = closed_braid_diagram(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap());
        assert_eq!(k.components().total(), 1);
        for f in -4i64..=4 {
            let d = k.two_cable_boundary(f).unwrap();
            assert_eq!(d.linking_number(0, 1).unwrap(), -f);
        }
    }

    #[test]
    fn cable_rejects_links() {
        let hopf = closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap());
        assert_eq!(hopf.two_cable_boundary(0), Err(DiagramError::NotAKnot(2)));
    }

    #[test]
    fn multi_component_cable() {
        let hopf = closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap());
        let d = hopf.cable_boundary_components(&[0, 0]).unwrap();
        assert_eq!(d.components().total(), 4);
        assert_eq!(d.n_crossings(), 8); // 2 crossings × 4 blocks, w_i = 0 so no clasps
        let uneven = hopf.cable_boundary_components(&[2, -1]).unwrap();
        assert_eq!(uneven.components().total(), 4);
        assert_eq!(uneven.n_crossings(), 8 + 4 + 2);
        let bad = hopf.cable_boundary_components(&[0]);
        assert!(matches!(bad, Err(DiagramError::Invalid(_))));
    }

    #[test]
    fn cable_with_free_loops() {
        use crate::diagram::FramedDiagram;
        let mut base = trefoil().disjoint_union(&LinkDiagram::unlink(1).oriented());
        assert_eq!(base.components().total(), 2);
        base = base.oriented();
        let fd = FramedDiagram::new(base, vec![0, 2]).unwrap();
        let d = fd.boundary_diagram().unwrap();
        assert_eq!(d.components().total(), 4);
        assert_eq!(d.n_crossings(), 18 + 4); // trefoil cable + (2,4) torus diagram
        assert_eq!(fd.total_framing(), 2);
    }

    #[test]
    fn granny_sum() {
        let g = trefoil().connected_sum(&trefoil()).unwrap();
        assert_eq!(g.n_crossings(), 6);
        assert_eq!(g.components().total(), 1);
        assert_eq!(g.writhe().unwrap(), 6);
        let square = trefoil().connected_sum(&trefoil().mirror()).unwrap();
        assert_eq!(square.writhe().unwrap(), 0);
    }

    #[test]
    fn sum_with_unknot_is_identity() {
        let t = trefoil();
        let s = t.connected_sum(&LinkDiagram::unknot()).unwrap();
        assert_eq!(s, t);
        let s2 = LinkDiagram::unknot().connected_sum(&t).unwrap();
        assert_eq!(s2, t);
    }
}
