//! Bounds on the modulus of quasipositivity q(K) and the plumbing around
//! them: constructive lower bounds from fences and positive braids,
//! polynomial upper bounds from R, G^k and the framed polynomial, report
//! assembly, knot families, seeded corpora, and consistency checks.

use crate::braid::{
    braid_as_plat, closed_braid_diagram, Band, BandRepresentation, BraidError, BraidWord, Plat,
    PlatHalf, PlatPlan,
};
use crate::diagram::{DiagramError, FramedDiagram, LinkDiagram};
use crate::fence::{
    fence_connected_sum, fence_m, fence_to_diagram, fence_writhe, Fence, FenceError,
};
use crate::laurent::LaurentError;
use crate::skein::{SkeinEngine, SkeinError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Seed used wherever a corpus is generated and no seed was requested.
pub const DEFAULT_SEED: u64 = 17;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("{0}")]
    Invalid(String),
    #[error("the diagram has {0} components; q applies to knots")]
    NotAKnot(usize),
    #[error(transparent)]
    Fence(#[from] FenceError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

// ----------------------------------------------------------------------
// Individual bounds
// ----------------------------------------------------------------------

/// Lower bound from a quasipositive fence presenting the knot: writhe of
/// the fence circle minus its number of saddle columns.
pub fn q_lower_from_fence(f: &Fence) -> Result<i64, BoundsError> {
    let w = fence_writhe(f)?;
    let m = fence_m(f)? as i64;
    Ok(w - m)
}

/// Lower bound e − n from a positive braid word on n strands with e
/// letters whose closure is a knot.
pub fn q_lower_closed_positive_braid(w: &BraidWord) -> Result<i64, BoundsError> {
    if !w.is_positive() {
        return Err(BoundsError::Invalid(
            "the e - n lower bound needs a positive word".into(),
        ));
    }
    let cycles = cycle_count(&w.permutation());
    if cycles != 1 {
        return Err(BoundsError::NotAKnot(cycles));
    }
    Ok(w.exponent_sum() - w.strands() as i64)
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for mut p in 0..perm.len() {
        if seen[p] {
            continue;
        }
        cycles += 1;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    cycles
}

fn require_knot(d: &LinkDiagram) -> Result<(), BoundsError> {
    let total = d.components().total();
    if total != 1 {
        return Err(BoundsError::NotAKnot(total));
    }
    Ok(())
}

/// Upper bound −1 + ord_v R(K).
pub fn q_upper_from_r(eng: &SkeinEngine, d: &LinkDiagram) -> Result<i64, BoundsError> {
    require_knot(d)?;
    let r = eng.r_poly(d)?;
    Ok(-1 + r.ord()?)
}

/// Upper bound −1 − deg_a G^k(K) for k ∈ {0, 1}.
pub fn q_upper_from_g(eng: &SkeinEngine, d: &LinkDiagram, k: i64) -> Result<i64, BoundsError> {
    require_knot(d)?;
    let g = eng.g_poly(d, k)?;
    Ok(-1 - g.deg()?)
}

/// Upper bound −1 − deg_a F*(K); checks that the degree agrees with the
/// best of the two G^k specializations before using it.
pub fn q_upper_from_f(eng: &SkeinEngine, d: &LinkDiagram) -> Result<i64, BoundsError> {
    require_knot(d)?;
    let f = eng.kauffman_mod2(d)?;
    let f_deg = f.deg_in('a')?;
    let g_deg = (0..=1)
        .filter_map(|k| eng.g_poly(d, k).ok())
        .filter_map(|g| g.deg().ok())
        .max();
    if g_deg != Some(f_deg) {
        return Err(BoundsError::Invalid(format!(
            "a-degree mismatch: F* has degree {f_deg}, specializations give {g_deg:?}"
        )));
    }
    Ok(-1 - f_deg)
}

/// Upper bound ⌊ord_v {K, 0} / 2⌋. The second value flags an odd order,
/// where the floor loses half a step.
pub fn q_upper_from_framed(eng: &SkeinEngine, d: &LinkDiagram) -> Result<(i64, bool), BoundsError> {
    require_knot(d)?;
    let fd = FramedDiagram::zero_framed(d.clone());
    let p = eng.framed_polynomial(&fd)?;
    let ord = p.ord_in('v')?;
    Ok((ord.div_euclid(2), ord.rem_euclid(2) != 0))
}

// ----------------------------------------------------------------------
// Reports
// ----------------------------------------------------------------------

/// One bound with a note on where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub value: i64,
    pub by: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBoundsReport {
    pub knot: String,
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
    pub exact: Option<i64>,
    pub warnings: Vec<String>,
}

impl QBoundsReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn best_lower(&self) -> Option<i64> {
        self.lower.iter().map(|b| b.value).max()
    }

    pub fn best_upper(&self) -> Option<i64> {
        self.upper.iter().map(|b| b.value).min()
    }
}

/// Everything q_report may draw on. Any piece may be missing; whatever is
/// present is used and whatever fails becomes a warning.
#[derive(Debug, Clone, Default)]
pub struct QBoundsInput {
    pub knot: String,
    pub diagram: Option<LinkDiagram>,
    pub fences: Vec<Fence>,
    pub positive_braids: Vec<BraidWord>,
    /// Set when the knot is known (or believed) to be slice; a
    /// nonnegative lower bound then contradicts it.
    pub slice: Option<bool>,
    pub use_framed: bool,
}

/// Collects every applicable bound and reconciles them. Failures of
/// individual bounds never abort the report; they are recorded as
/// warnings.
pub fn q_report(eng: &SkeinEngine, input: &QBoundsInput) -> QBoundsReport {
    let mut report = QBoundsReport {
        knot: input.knot.clone(),
        lower: Vec::new(),
        upper: Vec::new(),
        exact: None,
        warnings: Vec::new(),
    };
    for (i, f) in input.fences.iter().enumerate() {
        match q_lower_from_fence(f) {
            Ok(v) => report.lower.push(BoundEntry {
                value: v,
                by: "fence: writhe - saddles".into(),
            }),
            Err(e) => report.warnings.push(format!("fence #{}: {e}", i + 1)),
        }
    }
    for (i, w) in input.positive_braids.iter().enumerate() {
        match q_lower_closed_positive_braid(w) {
            Ok(v) => report.lower.push(BoundEntry {
                value: v,
                by: "positive braid closure: e - n".into(),
            }),
            Err(e) => report.warnings.push(format!("braid #{}: {e}", i + 1)),
        }
    }

    let diagram = input
        .diagram
        .clone()
        .or_else(|| input.fences.first().and_then(|f| fence_to_diagram(f).ok()));
    match diagram {
        None => report
            .warnings
            .push("no diagram available; polynomial upper bounds skipped".into()),
        Some(raw) => {
            // All the polynomial bounds are isotopy invariants, so work on
            // the reduced diagram; budgets are checked on what the engine
            // actually sees.
            let d = raw.simplify().diagram;
            if d.components().total() != 1 {
                report.warnings.push(format!(
                    "diagram has {} components; upper bounds apply to knots only",
                    d.components().total()
                ));
            } else {
                match q_upper_from_r(eng, &d) {
                    Ok(v) => report.upper.push(BoundEntry {
                        value: v,
                        by: "R: v-order - 1".into(),
                    }),
                    Err(e) => report.warnings.push(format!("R bound: {e}")),
                }
                if d.n_crossings() <= eng.budget_f() {
                    for k in 0..=1 {
                        match q_upper_from_g(eng, &d, k) {
                            Ok(v) => report.upper.push(BoundEntry {
                                value: v,
                                by: format!("G^{k}: -1 - a-degree"),
                            }),
                            Err(e) => report.warnings.push(format!("G^{k} bound: {e}")),
                        }
                    }
                } else {
                    report.warnings.push(format!(
                        "G bounds skipped: {} crossings exceed the mod-2 budget of {}",
                        d.n_crossings(),
                        eng.budget_f()
                    ));
                }
                if input.use_framed {
                    match q_upper_from_framed(eng, &d) {
                        Ok((v, odd)) => {
                            if odd {
                                report
                                    .warnings
                                    .push("framed polynomial v-order is odd; bound floored".into());
                            }
                            report.upper.push(BoundEntry {
                                value: v,
                                by: "framed polynomial: v-order / 2".into(),
                            });
                        }
                        Err(e) => report.warnings.push(format!("framed bound: {e}")),
                    }
                }
            }
        }
    }

    if let (Some(lo), Some(hi)) = (report.best_lower(), report.best_upper()) {
        if lo == hi {
            report.exact = Some(lo);
        } else if lo > hi {
            report
                .warnings
                .push(format!("bounds crossed: lower {lo} exceeds upper {hi}"));
        }
    }
    if input.slice == Some(true) {
        if let Some(lo) = report.best_lower() {
            if lo >= 0 {
                report.warnings.push(format!(
                    "slice flag set but lower bound {lo} >= 0; a slice knot needs q < 0"
                ));
            }
        }
    }
    report
}

// ----------------------------------------------------------------------
// Families
// ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// The 2-strand torus knot O{2, 2k+1}.
    Torus2 { k: i64 },
    /// Closure of (σ1 … σ_{m−1})^n in B_m.
    TorusBraid { m: usize, n: usize },
    /// The pretzel P(r, s, t): plat of σ1^r σ3^s σ5^t in B_6.
    Pretzel { r: usize, s: usize, t: usize },
    /// Closure of an arbitrary positive word.
    PositiveBraid { word: BraidWord },
}

/// A generated family member, in every presentation the generator can
/// offer: a diagram always, a fence always, and whichever of the braid
/// and plat routes applies.
#[derive(Debug, Clone)]
pub struct FamilyOutput {
    pub description: String,
    pub diagram: LinkDiagram,
    pub fence: Fence,
    pub braid: Option<BraidWord>,
    pub plat: Option<Plat>,
}

/// Plat of σ1^r σ3^s σ5^t in B_6 with both plans (1 6)(2 3)(4 5); its
/// closure is the pretzel P(r, s, t).
pub fn pretzel_plat(r: usize, s: usize, t: usize) -> Plat {
    let mut letters = Vec::new();
    letters.extend(std::iter::repeat_n(1, r));
    letters.extend(std::iter::repeat_n(3, s));
    letters.extend(std::iter::repeat_n(5, t));
    let word = BraidWord::new(6, letters).expect("generators fit in B_6");
    let half = PlatHalf::new(vec![(1, 6), (2, 3), (4, 5)], 6).expect("caps are non-crossing");
    let plan = PlatPlan::new(6, half.clone(), half).expect("sizes match");
    Plat::new(word, plan).expect("strand counts match")
}

/// Plat of σ1 σ3 … σ_{2r−1} in B_2r with plans (1 2r)(2 3)…(2r−2 2r−1);
/// its closure is O{2, −r}, presented by a positive word.
pub fn negative_torus_plat(r: usize) -> Plat {
    assert!(r >= 1, "need at least one crossing");
    let letters: Vec<i32> = (0..r).map(|k| (2 * k + 1) as i32).collect();
    let word = BraidWord::new(2 * r, letters).expect("generators fit in B_2r");
    let mut pairs = vec![(1, 2 * r)];
    for k in 1..r {
        pairs.push((2 * k, 2 * k + 1));
    }
    let half = PlatHalf::new(pairs, 2 * r).expect("caps are non-crossing");
    let plan = PlatPlan::new(2 * r, half.clone(), half).expect("sizes match");
    Plat::new(word, plan).expect("strand counts match")
}

pub fn family_generate(spec: &FamilySpec) -> Result<FamilyOutput, BoundsError> {
    match spec {
        FamilySpec::Torus2 { k } => {
            let m = 2 * k + 1;
            let description = format!("torus knot O{{2,{m}}}");
            if m >= -1 {
                // m = −1 is the unknot: the empty word on one strand.
                let (n, reps) = if m >= 1 { (2, m as usize) } else { (1, 0) };
                let word = BraidWord::new(n, vec![1; reps])?;
                from_positive_braid(description, word)
            } else {
                let plat = negative_torus_plat((-m) as usize);
                from_positive_plat(description, plat)
            }
        }
        FamilySpec::TorusBraid { m, n } => {
            if *m < 2 || *n < 1 {
                return Err(BoundsError::Invalid(format!(
                    "torus braid o{{{m},{n}}} needs m >= 2 and n >= 1"
                )));
            }
            let mut letters = Vec::with_capacity((m - 1) * n);
            for _ in 0..*n {
                letters.extend((1..*m).map(|g| g as i32));
            }
            let word = BraidWord::new(*m, letters)?;
            from_positive_braid(format!("torus braid closure o{{{m},{n}}}"), word)
        }
        FamilySpec::Pretzel { r, s, t } => {
            let odd = [r, s, t].iter().filter(|x| **x % 2 == 1).count();
            if odd < 2 {
                return Err(BoundsError::Invalid(format!(
                    "P({r},{s},{t}) is a link, not a knot: fewer than two odd parameters"
                )));
            }
            let plat = pretzel_plat(*r, *s, *t);
            from_positive_plat(format!("pretzel P({r},{s},{t})"), plat)
        }
        FamilySpec::PositiveBraid { word } => {
            if !word.is_positive() {
                return Err(BoundsError::Invalid("the word must be positive".into()));
            }
            from_positive_braid(
                format!(
                    "closure of the positive word [{}] on {} strands",
                    word.to_text(),
                    word.strands()
                ),
                word.clone(),
            )
        }
    }
}

fn from_positive_braid(description: String, word: BraidWord) -> Result<FamilyOutput, BoundsError> {
    let plat = braid_as_plat(&word);
    let fence = crate::fence::plat_to_fence(&plat)?;
    let diagram = closed_braid_diagram(&word);
    Ok(FamilyOutput {
        description,
        diagram,
        fence,
        braid: Some(word),
        plat: Some(plat),
    })
}

fn from_positive_plat(description: String, plat: Plat) -> Result<FamilyOutput, BoundsError> {
    let fence = crate::fence::plat_to_fence(&plat)?;
    let diagram = plat.diagram();
    Ok(FamilyOutput {
        description,
        diagram,
        fence,
        braid: None,
        plat: Some(plat),
    })
}

/// q_report over everything a family member carries.
pub fn family_report(eng: &SkeinEngine, fam: &FamilyOutput, use_framed: bool) -> QBoundsReport {
    let input = QBoundsInput {
        knot: fam.description.clone(),
        diagram: Some(fam.diagram.clone()),
        fences: vec![fam.fence.clone()],
        positive_braids: fam.braid.iter().cloned().collect(),
        slice: None,
        use_framed,
    };
    q_report(eng, &input)
}

// ----------------------------------------------------------------------
// Seeded corpora
// ----------------------------------------------------------------------

/// `count` words, each on 2..=max_strands strands with 1..=max_len
/// uniformly signed letters. Deterministic in the seed.
pub fn random_braid_words(
    seed: u64,
    count: usize,
    max_strands: usize,
    max_len: usize,
) -> Vec<BraidWord> {
    assert!(max_strands >= 2 && max_len >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_strands);
            let len = rng.gen_range(1..=max_len);
            let letters = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..n) as i32;
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            BraidWord::new(n, letters).expect("letters are in range")
        })
        .collect()
}

/// `count` positive words whose closures are knots (the induced
/// permutation is a single cycle), by rejection sampling.
pub fn random_positive_knot_words(
    seed: u64,
    count: usize,
    max_strands: usize,
    max_len: usize,
) -> Vec<BraidWord> {
    assert!(max_strands >= 2 && max_len >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..n) as i32).collect();
        let w = BraidWord::new(n, letters).expect("letters are in range");
        if cycle_count(&w.permutation()) == 1 {
            out.push(w);
        }
    }
    out
}

/// `count` quasipositive band representations whose bands run through all
/// strands in one cycle, so the braided surface is an annulus embedded
/// along a single unknotted-core fence circle.
pub fn random_annular_band_reps(
    seed: u64,
    count: usize,
    max_strands: usize,
) -> Vec<BandRepresentation> {
    assert!(max_strands >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_strands);
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(&mut rng);
            let mut bands: Vec<Band> = (0..n)
                .map(|i| {
                    let a = order[i];
                    let b = order[(i + 1) % n];
                    Band::new(a.min(b), a.max(b), 1, n).expect("strands are in range")
                })
                .collect();
            bands.shuffle(&mut rng);
            BandRepresentation::new(n, bands).expect("bands are valid")
        })
        .collect()
}

// ----------------------------------------------------------------------
// Checks
// ----------------------------------------------------------------------

/// ord_v P(closure) ≥ e − n + 1 for any braid word.
pub fn mfw_check(eng: &SkeinEngine, w: &BraidWord) -> Result<bool, BoundsError> {
    let d = closed_braid_diagram(w);
    let p = eng.homfly_p(&d)?;
    Ok(p.ord_in('v')? > w.exponent_sum() - w.strands() as i64)
}

/// For a positive word with knot closure: ord_v R = e − n + 1 and the
/// coefficient there is positive.
pub fn positive_braid_ord_check(eng: &SkeinEngine, w: &BraidWord) -> Result<bool, BoundsError> {
    if !w.is_positive() || cycle_count(&w.permutation()) != 1 {
        return Err(BoundsError::Invalid(
            "needs a positive word with knot closure".into(),
        ));
    }
    let r = eng.r_poly(&closed_braid_diagram(w))?;
    let target = w.exponent_sum() - w.strands() as i64 + 1;
    Ok(r.ord()? == target && r.leading_low_coeff()? > 0)
}

/// ord_z P ≥ 1 − c and ord_x F* ≥ 1 − c on one diagram.
pub fn order_floor_check(eng: &SkeinEngine, d: &LinkDiagram) -> Result<bool, BoundsError> {
    let c = d.components().total() as i64;
    let p = eng.homfly_p(d)?;
    let f = eng.kauffman_mod2(d)?;
    Ok(p.ord_in('z')? >= 1 - c && f.ord_in('x')? >= 1 - c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubadditivityReport {
    pub part_bounds: Vec<i64>,
    pub sum_bound: i64,
    /// sum_bound + 1 on the left, Σ (part + 1) on the right.
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// Connect-sums the fences and compares the composite lower bound against
/// the parts in the (q + 1)-additive form.
pub fn subadditivity_check(fences: &[Fence]) -> Result<SubadditivityReport, BoundsError> {
    if fences.is_empty() {
        return Err(BoundsError::Invalid("no fences to sum".into()));
    }
    let part_bounds: Vec<i64> = fences
        .iter()
        .map(q_lower_from_fence)
        .collect::<Result<_, _>>()?;
    let sum = fence_connected_sum(fences)?;
    let sum_bound = q_lower_from_fence(&sum)?;
    let lhs = sum_bound + 1;
    let rhs = part_bounds.iter().map(|b| b + 1).sum();
    Ok(SubadditivityReport {
        part_bounds,
        sum_bound,
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}

/// R_{P(r,s,t)} = v^{−2} R_{P(r,s,t−2)} − v^{−1} R_{O{2,r+s}} for odd r, s
/// and even t ≥ 2, where O{2,r+s} carries the parallel (braid closure)
/// orientation.
pub fn pretzel_r_recursion_check(
    eng: &SkeinEngine,
    r: usize,
    s: usize,
    t: usize,
) -> Result<bool, BoundsError> {
    if r.is_multiple_of(2) || s.is_multiple_of(2) || !t.is_multiple_of(2) || t < 2 {
        return Err(BoundsError::Invalid(
            "the recursion needs odd r, s and even t >= 2".into(),
        ));
    }
    let r_t = eng.r_poly(&pretzel_plat(r, s, t).diagram())?;
    let r_t2 = eng.r_poly(&pretzel_plat(r, s, t - 2).diagram())?;
    let torus = closed_braid_diagram(&BraidWord::new(2, vec![1; r + s])?);
    let r_torus = eng.r_poly(&torus)?;
    let rhs = r_t2
        .mul_monomial(-2, 1)?
        .sub(&r_torus.mul_monomial(-1, 1)?)?;
    Ok(r_t == rhs)
}

// ----------------------------------------------------------------------
// Annulus boundary from a band representation
// ----------------------------------------------------------------------

/// Oriented diagram of the boundary of the braided surface of `b`: the
/// braided surface spans the closure of the expanded word, so that
/// closure, with its all-strands-upward orientation, is the boundary
/// with every circle parallel to the braid axis.
pub fn band_rep_boundary_diagram(b: &BandRepresentation) -> LinkDiagram {
    closed_braid_diagram(&b.expanded_word())
}

/// The framing of the annulus presented by `b`, measured as minus the
/// linking number of its two boundary circles with parallel orientations.
pub fn band_rep_framing(b: &BandRepresentation) -> Result<i64, BoundsError> {
    let d = band_rep_boundary_diagram(b);
    let total = d.components().total();
    if total != 2 {
        return Err(BoundsError::Invalid(format!(
            "the braided surface has {total} boundary circles; an annulus needs 2"
        )));
    }
    Ok(-d.linking_number(0, 1)?)
}
