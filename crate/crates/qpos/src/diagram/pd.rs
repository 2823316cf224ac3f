//! PD-code text serialization.
//!
//! Format:
//! ```text
//! pd
//! X[1,5,2,4]
//! X[3,1,4,6]
//! X[5,3,6,2]
//! signs + + +
//! loops 0
//! ```
//! Each `X[a,b,c,d]` lists the four edge labels around a crossing
//! counterclockwise starting from the incoming under-strand edge, as in the
//! usual knot-tabulation convention. Edge labels run 1..2n in traversal
//! order. The optional `signs` line (one +/− per crossing, in X-line order)
//! marks the text as oriented; without it the parsed diagram is unoriented.
//! The writer renders the canonical traversal, so the output is independent
//! of internal labels and `serialize ∘ parse` is the identity on anything the
//! writer produces (a foreign PD text is normalized by one round trip).

use super::{crossing_of, dart, through, Dart, DiagramError, LinkDiagram};

impl LinkDiagram {
    pub fn to_pd_string(&self) -> Result<String, DiagramError> {
        let (flags, starts) = self.canonical_traversal()?;
        let n = self.n_crossings();
        let mut label = vec![0usize; self.n_darts()];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut next_label = 0usize;
        for &start in &starts {
            let mut visits = Vec::new();
            let mut d = start;
            loop {
                visits.push(d);
                let c = crossing_of(d);
                if !seen[c] {
                    seen[c] = true;
                    order.push(c);
                }
                let out = through(d);
                debug_assert!(flags[d as usize] && !flags[out as usize]);
                d = self.mate(out);
                if d == start {
                    break;
                }
            }
            for (k, &v) in visits.iter().enumerate() {
                next_label += 1;
                let from = through(v); // edge out of this visit...
                let to = visits[(k + 1) % visits.len()]; // ...into the next
                label[from as usize] = next_label;
                label[to as usize] = next_label;
            }
        }

        let mut out = String::from("pd\n");
        for &c in &order {
            let u = if flags[dart(c, 0) as usize] { 0u8 } else { 2 };
            let e: Vec<String> = (0..4)
                .map(|k| label[dart(c, (u + k) % 4) as usize].to_string())
                .collect();
            out.push_str(&format!("X[{}]\n", e.join(",")));
        }
        if self.is_oriented() && n > 0 {
            let signs: Vec<&str> = order
                .iter()
                .map(|&c| {
                    // The canonical flags differ from stored ones at most by a
                    // global reversal, which preserves every crossing sign.
                    let u = if flags[dart(c, 0) as usize] { 0u8 } else { 2 };
                    let o = if flags[dart(c, 1) as usize] { 1u8 } else { 3 };
                    if (o + 4 - u) % 4 == 1 {
                        "+"
                    } else {
                        "-"
                    }
                })
                .collect();
            out.push_str(&format!("signs {}\n", signs.join(" ")));
        }
        out.push_str(&format!("loops {}\n", self.free_loops()));
        Ok(out)
    }

    pub fn from_pd_string(text: &str) -> Result<Self, DiagramError> {
        let pd = |m: String| DiagramError::Pd(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some("pd") => {}
            other => return Err(pd(format!("expected 'pd' header, got {other:?}"))),
        }
        let mut rows: Vec<[usize; 4]> = Vec::new();
        let mut signs: Option<Vec<i8>> = None;
        let mut loops = 0usize;
        let mut saw_loops = false;
        for line in lines {
            if let Some(rest) = line.strip_prefix("X[") {
                if signs.is_some() || saw_loops {
                    return Err(pd("X line after signs/loops".into()));
                }
                let body = rest
                    .strip_suffix(']')
                    .ok_or_else(|| pd(format!("unterminated {line:?}")))?;
                let nums: Vec<usize> = body
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| pd(format!("bad labels in {line:?}")))?;
                let arr: [usize; 4] = nums
                    .try_into()
                    .map_err(|_| pd(format!("need 4 labels in {line:?}")))?;
                rows.push(arr);
            } else if let Some(rest) = line.strip_prefix("signs") {
                let parsed: Result<Vec<i8>, DiagramError> = rest
                    .split_whitespace()
                    .map(|t| match t {
                        "+" => Ok(1),
                        "-" => Ok(-1),
                        _ => Err(pd(format!("bad sign {t:?}"))),
                    })
                    .collect();
                let v = parsed?;
                if v.len() != rows.len() {
                    return Err(pd(format!(
                        "{} signs for {} crossings",
                        v.len(),
                        rows.len()
                    )));
                }
                signs = Some(v);
            } else if let Some(rest) = line.strip_prefix("loops") {
                loops = rest
                    .trim()
                    .parse()
                    .map_err(|_| pd(format!("bad loop count {rest:?}")))?;
                saw_loops = true;
            } else {
                return Err(pd(format!("unexpected line {line:?}")));
            }
        }

        let n = rows.len();
        let n_edges = 2 * n;
        let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); n_edges + 1];
        for (c, row) in rows.iter().enumerate() {
            for (s, &lab) in row.iter().enumerate() {
                if lab < 1 || lab > n_edges {
                    return Err(pd(format!("edge label {lab} out of range 1..{n_edges}")));
                }
                ends[lab].push(dart(c, s as u8));
            }
        }
        let mut mate = vec![Dart::MAX; 4 * n];
        for (lab, e) in ends.iter().enumerate().skip(1) {
            if e.len() != 2 {
                return Err(pd(format!("edge label {lab} used {} times (need 2)", e.len())));
            }
            mate[e[0] as usize] = e[1];
            mate[e[1] as usize] = e[0];
        }
        let d = LinkDiagram::from_mates(mate, loops)
            .map_err(|e| pd(format!("inconsistent PD: {e}")))?;
        match signs {
            None => Ok(d),
            Some(signs) => {
                let mut flags = vec![false; 4 * n];
                for (c, &sg) in signs.iter().enumerate() {
                    flags[dart(c, 0) as usize] = true; // a = incoming under
                    let over_in = if sg > 0 { 1 } else { 3 };
                    flags[dart(c, over_in) as usize] = true;
                }
                d.with_orientation(flags)
                    .map_err(|e| pd(format!("signs are not globally coherent: {e}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::braid::{closed_braid_diagram, BraidWord};
    use crate::diagram::LinkDiagram;

    fn round_trip(d: &LinkDiagram) {
        let text = d.to_pd_string().unwrap();
        let back = LinkDiagram::from_pd_string(&text).unwrap();
        assert_eq!(back.is_oriented(), d.is_oriented() && d.n_crossings() > 0);
        assert_eq!(back.free_loops(), d.free_loops());
        // Bit-exact stability of the text form.
        assert_eq!(back.to_pd_string().unwrap(), text);
        // Same diagram up to relabeling.
        if back.is_oriented() == d.is_oriented() {
            assert_eq!(back.canonical_code().unwrap(), d.canonical_code().unwrap());
        }
    }

    #[test]
    fn trefoil_pd() {
        let t = closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
        let text = t.to_pd_string().unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("X[")).count(), 3);
        assert!(text.contains("signs + + +"));
        assert!(text.ends_with("loops 0\n"));
        round_trip(&t);
        round_trip(&t.mirror());
        round_trip(&t.forget_orientation());
    }

    #[test]
    fn multi_component_and_loops() {
        let hopf = closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap());
        round_trip(&hopf);
        round_trip(&hopf.reverse_component(1).unwrap());
        let with_loop = hopf.clone().with_free_loops(2);
        round_trip(&with_loop);
        let unlink = LinkDiagram::unlink(3);
        assert_eq!(unlink.to_pd_string().unwrap(), "pd\nloops 3\n");
        round_trip(&unlink);
    }

    #[test]
    fn kinked_pd() {
        // A kink produces an edge label appearing twice in one X line.
        let k = closed_braid_diagram(&BraidWord::new(2, vec![1]).unwrap());
        let text = k.to_pd_string().unwrap();
        assert!(text.starts_with("pd\nX["));
        round_trip(&k);
    }

    #[test]
    fn rejects_garbage() {
        assert!(LinkDiagram::from_pd_string("nope").is_err());
        assert!(LinkDiagram::from_pd_string("pd\nX[1,2,3]\nloops 0").is_err());
        assert!(LinkDiagram::from_pd_string("pd\nX[1,1,2,3]\nloops 0").is_err());
        // Incoherent signs: a positive kink declared negative.
        let k = closed_braid_diagram(&BraidWord::new(2, vec![1]).unwrap());
        let text = k.to_pd_string().unwrap();
        let flipped = text.replace("signs +", "signs -");
        assert!(LinkDiagram::from_pd_string(&flipped).is_err());
    }
}
