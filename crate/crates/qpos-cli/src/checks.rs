//! The property suite behind `qpos check`.
//!
//! Each property draws its cases from a seeded corpus, so a run is
//! reproducible from the seed alone. A property failure carries the first
//! offending cases; an error while computing (budget, malformed input)
//! fails the property with the error as detail.

use qpos::bounds::{
    band_rep_boundary_diagram, band_rep_framing, mfw_check, negative_torus_plat,
    order_floor_check, positive_braid_ord_check, pretzel_plat, pretzel_r_recursion_check,
    random_annular_band_reps, random_braid_words, random_positive_knot_words,
    subadditivity_check,
};
use qpos::braid::{braid_as_plat, closed_braid_diagram, BraidWord};
use qpos::diagram::LinkDiagram;
use qpos::fence::{band_rep_to_fence, fence_m, fence_writhe, plat_to_fence};
use qpos::skein::SkeinEngine;

pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub pass: bool,
    pub detail: String,
}

type Outcome = Result<(usize, Vec<String>), String>;

fn record(out: &mut Vec<PropertyResult>, name: &'static str, outcome: Outcome) {
    match outcome {
        Ok((cases, failures)) if failures.is_empty() => {
            out.push(PropertyResult { name, cases, pass: true, detail: String::new() })
        }
        Ok((cases, failures)) => {
            let mut detail = failures[..failures.len().min(3)].join("; ");
            if failures.len() > 3 {
                detail.push_str(&format!(" (+{} more)", failures.len() - 3));
            }
            out.push(PropertyResult { name, cases, pass: false, detail })
        }
        Err(e) => out.push(PropertyResult { name, cases: 0, pass: false, detail: e }),
    }
}

fn word_label(w: &BraidWord) -> String {
    format!("word {:?} on {} strands", w.letters(), w.strands())
}

fn small_diagrams(seed: u64) -> Vec<(String, LinkDiagram)> {
    let mut out: Vec<(String, LinkDiagram)> = vec![
        ("unknot".into(), LinkDiagram::unknot()),
        (
            "trefoil".into(),
            closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap()),
        ),
        ("figure-eight".into(), pretzel_plat(1, 1, 2).diagram()),
        ("O{2,-3}".into(), negative_torus_plat(3).diagram()),
    ];
    for w in random_braid_words(seed, 40, 4, 8) {
        out.push((word_label(&w), closed_braid_diagram(&w)));
    }
    out
}

pub fn run_suite(seed: u64, eng: &SkeinEngine) -> Vec<PropertyResult> {
    let mut out = Vec::new();

    record(&mut out, "mfw-inequality", {
        let words = random_braid_words(seed, 60, 4, 8);
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for w in &words {
            match mfw_check(eng, w) {
                Ok(true) => {}
                Ok(false) => fails.push(word_label(w)),
                Err(e) => {
                    res = Err(format!("{}: {e}", word_label(w)));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (words.len(), fails);
        }
        res
    });

    record(&mut out, "positive-braid-order", {
        let words = random_positive_knot_words(seed.wrapping_add(1), 40, 5, 10);
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for w in &words {
            match positive_braid_ord_check(eng, w) {
                Ok(true) => {}
                Ok(false) => fails.push(word_label(w)),
                Err(e) => {
                    res = Err(format!("{}: {e}", word_label(w)));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (words.len(), fails);
        }
        res
    });

    record(&mut out, "r-specialization", {
        r_specialization(seed.wrapping_add(2), eng)
    });

    record(&mut out, "g0-equals-r-mod2", {
        let corpus = small_diagrams(seed.wrapping_add(2));
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for (label, d) in &corpus {
            match eng.g0_matches_r(d) {
                Ok(true) => {}
                Ok(false) => fails.push(label.clone()),
                Err(e) => {
                    res = Err(format!("{label}: {e}"));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (corpus.len(), fails);
        }
        res
    });

    record(&mut out, "order-floors", {
        let corpus = small_diagrams(seed.wrapping_add(5));
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for (label, d) in &corpus {
            match order_floor_check(eng, d) {
                Ok(true) => {}
                Ok(false) => fails.push(label.clone()),
                Err(e) => {
                    res = Err(format!("{label}: {e}"));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (corpus.len(), fails);
        }
        res
    });

    record(&mut out, "framed-congruence", {
        // the zero-framed trefoil boundary has 18 crossings, so this one
        // property runs on a widened engine
        let wide = SkeinEngine::new().with_budgets(eng.budget_p().max(24), eng.budget_f().max(10));
        let cases: Vec<(String, LinkDiagram)> = vec![
            ("unknot".into(), LinkDiagram::unknot()),
            (
                "hopf".into(),
                closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap()),
            ),
            (
                "trefoil".into(),
                closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap()),
            ),
            ("figure-eight".into(), pretzel_plat(1, 1, 2).diagram()),
        ];
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for (label, d) in &cases {
            match wide.congruence_check(d) {
                Ok(true) => {}
                Ok(false) => fails.push(label.clone()),
                Err(e) => {
                    res = Err(format!("{label}: {e}"));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (cases.len(), fails);
        }
        res
    });

    record(&mut out, "pretzel-r-recursion", {
        let cases = [(1usize, 1usize, 2usize), (3, 3, 2), (3, 5, 4)];
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for &(r, s, t) in &cases {
            match pretzel_r_recursion_check(eng, r, s, t) {
                Ok(true) => {}
                Ok(false) => fails.push(format!("P({r},{s},{t})")),
                Err(e) => {
                    res = Err(format!("P({r},{s},{t}): {e}"));
                    break;
                }
            }
        }
        if let Ok(out) = &mut res {
            *out = (cases.len(), fails);
        }
        res
    });

    record(&mut out, "fence-subadditivity", {
        let parts: Result<Vec<_>, _> = [3usize, 5]
            .iter()
            .map(|&k| {
                let w = BraidWord::new(2, vec![1; k]).unwrap();
                plat_to_fence(&braid_as_plat(&w))
            })
            .collect();
        match parts {
            Err(e) => Err(e.to_string()),
            Ok(parts) => match subadditivity_check(&parts) {
                Err(e) => Err(e.to_string()),
                Ok(rep) if rep.holds => Ok((1, Vec::new())),
                Ok(rep) => Ok((1, vec![format!("lhs {} < rhs {}", rep.lhs, rep.rhs)])),
            },
        }
    });

    record(&mut out, "annulus-framing", {
        let reps = random_annular_band_reps(seed.wrapping_add(3), 30, 5);
        let mut fails = Vec::new();
        let mut res: Outcome = Ok((0, Vec::new()));
        for (i, b) in reps.iter().enumerate() {
            let measured = match band_rep_framing(b) {
                Ok(v) => v,
                Err(e) => {
                    res = Err(format!("rep {i}: {e}"));
                    break;
                }
            };
            let from_fence = band_rep_to_fence(b)
                .map_err(|e| e.to_string())
                .and_then(|cf| {
                    let w = fence_writhe(&cf.fence).map_err(|e| e.to_string())?;
                    let m = fence_m(&cf.fence).map_err(|e| e.to_string())?;
                    Ok(w - m as i64)
                });
            match from_fence {
                Ok(v) if v == measured => {}
                Ok(v) => fails.push(format!("rep {i}: boundary {measured}, fence {v}")),
                Err(e) => {
                    res = Err(format!("rep {i}: {e}"));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            *r = (reps.len(), fails);
        }
        res
    });

    record(&mut out, "annulus-boundary-order", {
        let reps = random_annular_band_reps(seed.wrapping_add(4), 30, 4);
        let mut fails = Vec::new();
        let mut tested = 0usize;
        let mut res: Outcome = Ok((0, Vec::new()));
        for (i, b) in reps.iter().enumerate() {
            let d = band_rep_boundary_diagram(b).simplify().diagram;
            if d.n_crossings() > eng.budget_p() {
                continue;
            }
            tested += 1;
            match eng.homfly_p(&d).and_then(|p| Ok(p.ord_in('v')?)) {
                Ok(ord) if ord >= 1 => {}
                Ok(ord) => fails.push(format!("rep {i}: v-order {ord}")),
                Err(e) => {
                    res = Err(format!("rep {i}: {e}"));
                    break;
                }
            }
        }
        if let Ok(r) = &mut res {
            if tested < 10 {
                fails.push(format!("only {tested} representations fit the budget"));
            }
            *r = (tested, fails);
        }
        res
    });

    out
}

fn r_specialization(seed: u64, eng: &SkeinEngine) -> Outcome {
    let corpus = small_diagrams(seed);
    let mut fails = Vec::new();
    for (label, d) in &corpus {
        let check = || -> Result<bool, String> {
            let p = eng.homfly_p(d).map_err(|e| e.to_string())?;
            let c = d.components().total() as i64;
            let spec = p
                .mul_monomial((0, c - 1), 1)
                .and_then(|q| q.eval_zero('z'))
                .map_err(|e| e.to_string())?;
            let r = eng.r_poly(d).map_err(|e| e.to_string())?;
            Ok(spec == r)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => fails.push(label.clone()),
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    Ok((corpus.len(), fails))
}
