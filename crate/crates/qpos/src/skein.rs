//! Skein-relation engines for the link polynomials.
//!
//! All three engines walk the same descending-chain expansion. A diagram is
//! simplified (Reidemeister I/II to a fixpoint), split into its disjoint
//! pieces, and — if crossings remain — expanded along the list of *bad*
//! crossings of one fixed canonical traversal: the crossings met first on
//! the under-strand. Switching every bad crossing in order yields a
//! descending diagram, whose polynomial is known in closed form, and each
//! switch costs one smoothing branch with strictly fewer crossings, so the
//! recursion terminates. The three engines differ only in the relation
//! applied per step and in the closed descending form:
//!
//! * `homfly_p`: P(L₊) = vz·P(L₀) + v²·P(L₋), descending base δ^{c−1} with
//!   δ = (v⁻¹−v)z⁻¹.
//! * `r_poly`: the z⁰ shadow of P. Disjoint components factor completely
//!   (R_L = (v⁻¹−v)^{c−1} v^{2τ(L)} ∏ R_{Kᵢ}), so the chain only ever runs
//!   on knots, where R(L₊) = v·R(L₀) + v²·R(L₋) and the descending base
//!   is 1.
//! * `kauffman_mod2`: the regular-isotopy polynomial Λ over Z/2 with
//!   Λ(L₊) + Λ(L₋) = x(Λ(L₀) + Λ(L_∞)), kink factors a^{±1}, descending
//!   base a^{Σ self-writhes}·δ_F^{c−1} with δ_F = (a+a⁻¹)x⁻¹ + 1; the
//!   writhe normalization a^{−w}Λ is F*.
//!
//! Intermediate results are memoized per engine in bounded caches keyed by
//! the canonical traversal code of the simplified diagram, so cached and
//! uncached runs produce bit-identical polynomials.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use crate::diagram::{CrossingCase, DiagramError, FramedDiagram, LinkDiagram};
use crate::laurent::{Laurent1, Laurent2, LaurentError, Ring};

/// Default crossing budget for the oriented-polynomial engines (P, R, and
/// the framed polynomial's boundary diagrams).
pub const DEFAULT_P_BUDGET: usize = 14;
/// Default crossing budget for the semi-oriented engine (Λ, F*, Gᵏ).
pub const DEFAULT_F_BUDGET: usize = 10;
/// Default component budget for the framed polynomial's sublink sum.
pub const DEFAULT_COMPONENT_BUDGET: usize = 3;
/// Default bound on memoized entries per engine.
pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeinError {
    #[error(
        "{invariant}: diagram has {crossings} crossings, over the budget of {budget} \
         (raise --budget-crossings to proceed)"
    )]
    Budget {
        invariant: &'static str,
        crossings: usize,
        budget: usize,
    },
    #[error("framed polynomial: {components} components exceed the sublink budget of {budget}")]
    ComponentBudget { components: usize, budget: usize },
    #[error("the empty link has no polynomial")]
    EmptyLink,
    #[error("G^k is defined for k in {{0, 1}}, got {0}")]
    BadGIndex(i64),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// δ = (v⁻¹ − v) z⁻¹, the oriented-polynomial value of a 2-component unlink.
pub fn delta_p() -> Laurent2 {
    Laurent2::from_terms(Ring::Int, ['v', 'z'], [((-1, -1), 1), ((1, -1), -1)]).expect("delta")
}

/// v⁻¹ − v, the R-polynomial value of a 2-component unlink.
pub fn delta_r() -> Laurent1 {
    Laurent1::from_terms(Ring::Int, 'v', [(-1, 1), (1, -1)]).expect("delta_r")
}

/// δ_F = (a + a⁻¹) x⁻¹ + 1 over Z/2, the Λ value of a 2-component unlink.
pub fn delta_f() -> Laurent2 {
    Laurent2::from_terms(Ring::Mod2, ['a', 'x'], [((-1, -1), 1), ((1, -1), 1), ((0, 0), 1)])
        .expect("delta_f")
}

struct Cache<V> {
    map: HashMap<Vec<u8>, (V, u64)>,
    tick: u64,
}

impl<V: Clone> Cache<V> {
    fn new() -> Self {
        Cache { map: HashMap::new(), tick: 0 }
    }

    fn get(&mut self, key: &[u8]) -> Option<V> {
        self.tick += 1;
        let t = self.tick;
        self.map.get_mut(key).map(|e| {
            e.1 = t;
            e.0.clone()
        })
    }

    /// Insert under an entry-count bound; on overflow the least recently
    /// used half of the entries is dropped.
    fn put(&mut self, cap: usize, key: Vec<u8>, value: V) {
        if self.map.len() >= cap && !self.map.contains_key(&key) {
            let mut stamps: Vec<u64> = self.map.values().map(|e| e.1).collect();
            stamps.sort_unstable();
            let cutoff = stamps[stamps.len() / 2];
            self.map.retain(|_, e| e.1 > cutoff);
        }
        self.tick += 1;
        let t = self.tick;
        self.map.insert(key, (value, t));
    }
}

/// Shared computation state: budgets plus one bounded memo table per
/// invariant. An engine is safe to share across threads; concurrent lookups
/// and inserts are serialized per table and last-writer-wins is benign
/// because every writer computes the same polynomial for a given key.
pub struct SkeinEngine {
    budget_p: usize,
    budget_f: usize,
    component_budget: usize,
    cache_cap: usize,
    p_cache: Mutex<Cache<Laurent2>>,
    r_cache: Mutex<Cache<Laurent1>>,
    f_cache: Mutex<Cache<Laurent2>>,
}

impl Default for SkeinEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl SkeinEngine {
    pub fn new() -> Self {
        SkeinEngine {
            budget_p: DEFAULT_P_BUDGET,
            budget_f: DEFAULT_F_BUDGET,
            component_budget: DEFAULT_COMPONENT_BUDGET,
            cache_cap: DEFAULT_CACHE_ENTRIES,
            p_cache: Mutex::new(Cache::new()),
            r_cache: Mutex::new(Cache::new()),
            f_cache: Mutex::new(Cache::new()),
        }
    }

    /// Raises (or lowers) the crossing budgets: `p` guards the oriented
    /// engines, `f` the semi-oriented one.
    pub fn with_budgets(mut self, p: usize, f: usize) -> Self {
        self.budget_p = p;
        self.budget_f = f;
        self
    }

    pub fn with_component_budget(mut self, n: usize) -> Self {
        self.component_budget = n;
        self
    }

    /// Bounds the memo tables to `n` entries each; `n = 0` disables
    /// memoization entirely.
    pub fn with_cache_entries(mut self, n: usize) -> Self {
        self.cache_cap = n;
        self
    }

    pub fn budget_p(&self) -> usize {
        self.budget_p
    }

    pub fn budget_f(&self) -> usize {
        self.budget_f
    }

    fn cache_on(&self) -> bool {
        self.cache_cap > 0
    }

    // ------------------------------------------------------------------
    // Oriented polynomial P
    // ------------------------------------------------------------------

    /// The oriented (HOMFLY) polynomial P(v, z). Unoriented inputs are
    /// canonically oriented first; for knots the choice is immaterial.
    pub fn homfly_p(&self, d: &LinkDiagram) -> Result<Laurent2, SkeinError> {
        if d.n_crossings() > self.budget_p {
            return Err(SkeinError::Budget {
                invariant: "homfly_p",
                crossings: d.n_crossings(),
                budget: self.budget_p,
            });
        }
        self.p_eval(&d.oriented())
    }

    fn p_eval(&self, input: &LinkDiagram) -> Result<Laurent2, SkeinError> {
        let d = input.simplify().diagram;
        let comps = d.components();
        let total = comps.total();
        if total == 0 {
            return Err(SkeinError::EmptyLink);
        }
        if d.n_crossings() == 0 {
            return delta_p().pow(total as u32 - 1).map_err(Into::into);
        }
        let pieces = d.split_pieces();
        let k = pieces.len() + d.free_loops();
        if k > 1 {
            let mut acc = delta_p().pow(k as u32 - 1)?;
            for piece in &pieces {
                acc = acc.mul(&self.p_eval(piece)?)?;
            }
            return Ok(acc);
        }

        // One crossing-connected piece.
        let key = if self.cache_on() { d.quick_code() } else { Vec::new() };
        if self.cache_on() {
            if let Some(hit) = self.p_cache.lock().unwrap().get(&key) {
                return Ok(hit);
            }
        }

        let starts = d.canonical_starts()?;
        let bad = d.bad_crossings(&starts)?;
        let mut sum = Laurent2::zero(Ring::Int, ['v', 'z']);
        let mut coeff = Laurent2::one(Ring::Int, ['v', 'z']);
        let mut cur = d.clone();
        for &x in &bad {
            let sign = cur.sign(x)?;
            let smoothed = self.p_eval(&cur.smooth_oriented(x)?)?;
            if sign > 0 {
                // P(L₊) = vz·P(L₀) + v²·P(L₋)
                sum = sum.add(&coeff.mul_monomial((1, 1), 1)?.mul(&smoothed)?)?;
                coeff = coeff.mul_monomial((2, 0), 1)?;
            } else {
                // P(L₋) = −v⁻¹z·P(L₀) + v⁻²·P(L₊)
                sum = sum.add(&coeff.mul_monomial((-1, 1), -1)?.mul(&smoothed)?)?;
                coeff = coeff.mul_monomial((-2, 0), 1)?;
            }
            cur = cur.switch_crossing(x)?;
        }
        // `cur` is now descending: an unlink of `total` circles.
        let base = delta_p().pow(total as u32 - 1)?;
        sum = sum.add(&coeff.mul(&base)?)?;

        if self.cache_on() {
            self.p_cache.lock().unwrap().put(self.cache_cap, key, sum.clone());
        }
        Ok(sum)
    }

    /// z^{c−1}·P at z = 0, computed through the full P engine. Used to
    /// cross-check `r_poly`, which evaluates the same invariant directly.
    pub fn r_from_homfly(&self, d: &LinkDiagram) -> Result<Laurent1, SkeinError> {
        let c = d.components().total();
        if c == 0 {
            return Err(SkeinError::EmptyLink);
        }
        let p = self.homfly_p(d)?;
        Ok(p.mul_monomial((0, c as i64 - 1), 1)?.eval_zero('z')?)
    }

    // ------------------------------------------------------------------
    // R polynomial
    // ------------------------------------------------------------------

    /// R(v) = (z^{c−1} P)|_{z=0}, evaluated by its own recursion: disjoint
    /// pieces and split components factor completely, so the skein chain
    /// only ever runs on knot diagrams.
    pub fn r_poly(&self, d: &LinkDiagram) -> Result<Laurent1, SkeinError> {
        if d.n_crossings() > self.budget_p {
            return Err(SkeinError::Budget {
                invariant: "r_poly",
                crossings: d.n_crossings(),
                budget: self.budget_p,
            });
        }
        self.r_eval(&d.oriented())
    }

    fn r_eval(&self, input: &LinkDiagram) -> Result<Laurent1, SkeinError> {
        let d = input.simplify().diagram;
        let comps = d.components();
        let total = comps.total();
        if total == 0 {
            return Err(SkeinError::EmptyLink);
        }
        if total > 1 {
            // R_L = (v⁻¹−v)^{c−1} · v^{2τ(L)} · ∏ᵢ R_{Kᵢ}
            let tau = d.total_linking()?;
            let mut acc = delta_r()
                .pow(total as u32 - 1)?
                .mul_monomial(2 * tau, 1)?;
            for i in 0..comps.n_curve {
                let keep: BTreeSet<usize> = [i].into_iter().collect();
                let sub = d.sublink(&keep)?;
                acc = acc.mul(&self.r_eval(&sub)?)?;
            }
            return Ok(acc);
        }
        if d.n_crossings() == 0 {
            return Ok(Laurent1::one(Ring::Int, 'v'));
        }

        let key = if self.cache_on() { d.quick_code() } else { Vec::new() };
        if self.cache_on() {
            if let Some(hit) = self.r_cache.lock().unwrap().get(&key) {
                return Ok(hit);
            }
        }

        let starts = d.canonical_starts()?;
        let bad = d.bad_crossings(&starts)?;
        let mut sum = Laurent1::zero(Ring::Int, 'v');
        let mut coeff = Laurent1::one(Ring::Int, 'v');
        let mut cur = d.clone();
        for &x in &bad {
            // Every crossing of a knot diagram is a self-crossing (case 1).
            let sign = cur.sign(x)?;
            let smoothed = self.r_eval(&cur.smooth_oriented(x)?)?;
            if sign > 0 {
                // R(L₊) = v·R(L₀) + v²·R(L₋)
                sum = sum.add(&coeff.mul_monomial(1, 1)?.mul(&smoothed)?)?;
                coeff = coeff.mul_monomial(2, 1)?;
            } else {
                // R(L₋) = −v⁻¹·R(L₀) + v⁻²·R(L₊)
                sum = sum.add(&coeff.mul_monomial(-1, -1)?.mul(&smoothed)?)?;
                coeff = coeff.mul_monomial(-2, 1)?;
            }
            cur = cur.switch_crossing(x)?;
        }
        // Descending knot diagram: R = 1.
        sum = sum.add(&coeff)?;

        if self.cache_on() {
            self.r_cache.lock().unwrap().put(self.cache_cap, key, sum.clone());
        }
        Ok(sum)
    }

    // ------------------------------------------------------------------
    // Semi-oriented polynomial over Z/2
    // ------------------------------------------------------------------

    /// F*(a, x): the mod-2 semi-oriented (Kauffman) polynomial, computed as
    /// a^{−w}·Λ. The writhe w is taken from the diagram's orientation
    /// (canonical orientation if absent; for knots the choice is
    /// immaterial).
    pub fn kauffman_mod2(&self, d: &LinkDiagram) -> Result<Laurent2, SkeinError> {
        if d.n_crossings() > self.budget_f {
            return Err(SkeinError::Budget {
                invariant: "kauffman_mod2",
                crossings: d.n_crossings(),
                budget: self.budget_f,
            });
        }
        let oriented = d.oriented();
        let w = oriented.writhe()?;
        let lam = self.lambda_eval(&oriented.forget_orientation())?;
        Ok(lam.mul_monomial((-w, 0), 1)?)
    }

    fn lambda_eval(&self, input: &LinkDiagram) -> Result<Laurent2, SkeinError> {
        let simplified = input.simplify();
        let d = simplified.diagram;
        // A removed positive kink contributes a factor a.
        let curl_exp = simplified.curls;
        let comps = d.components();
        let total = comps.total();
        if total == 0 {
            return Err(SkeinError::EmptyLink);
        }
        if d.n_crossings() == 0 {
            let base = delta_f().pow(total as u32 - 1)?;
            return Ok(base.mul_monomial((curl_exp, 0), 1)?);
        }
        let pieces = d.split_pieces();
        let k = pieces.len() + d.free_loops();
        if k > 1 {
            let mut acc = delta_f().pow(k as u32 - 1)?;
            for piece in &pieces {
                acc = acc.mul(&self.lambda_eval(piece)?)?;
            }
            return Ok(acc.mul_monomial((curl_exp, 0), 1)?);
        }

        let key = if self.cache_on() { d.quick_code() } else { Vec::new() };
        if self.cache_on() {
            if let Some(hit) = self.f_cache.lock().unwrap().get(&key) {
                return Ok(hit.mul_monomial((curl_exp, 0), 1)?);
            }
        }

        // The traversal needs an orientation; Λ itself does not depend on
        // it, so the canonical one is as good as any.
        let oc = d.orient_canonically();
        let starts = oc.canonical_starts()?;
        let bad = oc.bad_crossings(&starts)?;
        let mut sum = Laurent2::zero(Ring::Mod2, ['a', 'x']);
        let mut cur = oc;
        for &x in &bad {
            // Λ(L₊) + Λ(L₋) = x·(Λ(L₀) + Λ(L_∞))  (mod 2)
            let [s0, s_inf] = cur.smoothings_unoriented(x)?;
            let branch = self.lambda_eval(&s0)?.add(&self.lambda_eval(&s_inf)?)?;
            sum = sum.add(&branch.mul_monomial((0, 1), 1)?)?;
            cur = cur.switch_crossing(x)?;
        }
        // `cur` is descending: each component is an unknot-with-kinks lying
        // wholly above the later ones, so Λ = a^{Σ self-writhes}·δ_F^{c−1}.
        let final_comps = cur.components();
        let mut sw = 0i64;
        for i in 0..final_comps.n_curve {
            sw += cur.self_writhe(i, &final_comps)?;
        }
        let base = delta_f().pow(total as u32 - 1)?.mul_monomial((sw, 0), 1)?;
        sum = sum.add(&base)?;

        if self.cache_on() {
            self.f_cache.lock().unwrap().put(self.cache_cap, key, sum.clone());
        }
        Ok(sum.mul_monomial((curl_exp, 0), 1)?)
    }

    /// Gᵏ(a) = (x^{c−1}·F*)|_{x=k} for k ∈ {0, 1}.
    ///
    /// The multiplier is x^{c−1}: with ord_x F* ≥ 1−c this clears every
    /// negative exponent of x, which is what makes the specialization at
    /// x = 0 land in Z/2[a^{±1}], and it is the reading under which
    /// G⁰ = R(a⁻¹) mod 2 holds on unlinks.
    pub fn g_poly(&self, d: &LinkDiagram, k: i64) -> Result<Laurent1, SkeinError> {
        if k != 0 && k != 1 {
            return Err(SkeinError::BadGIndex(k));
        }
        let c = d.components().total();
        if c == 0 {
            return Err(SkeinError::EmptyLink);
        }
        let f = self.kauffman_mod2(d)?;
        let shifted = f.mul_monomial((0, c as i64 - 1), 1)?;
        let out = if k == 0 {
            shifted.eval_zero('x')?
        } else {
            shifted.eval_one('x')?
        };
        Ok(out)
    }

    /// Checks G⁰ = R(a⁻¹) mod 2 on one diagram.
    pub fn g0_matches_r(&self, d: &LinkDiagram) -> Result<bool, SkeinError> {
        let g0 = self.g_poly(d, 0)?;
        let r = self.r_poly(d)?.reduce_mod2().invert_var().rename_var('a');
        Ok(g0 == r)
    }

    // ------------------------------------------------------------------
    // Framed polynomial
    // ------------------------------------------------------------------

    /// {L, f}(v, z) = (−1)^{c(L)} (1 + (v⁻¹−v) z⁻¹ Σ_{∅≠L′⊆L} (−1)^{c(L′)}
    /// P_{∂A(L′, f|L′)}), summing over all non-empty sublinks. The sublink
    /// count is guarded by the component budget and each boundary diagram
    /// by the crossing budget.
    pub fn framed_polynomial(&self, fd: &FramedDiagram) -> Result<Laurent2, SkeinError> {
        let d = fd.diagram.oriented();
        let c = d.components().total();
        if c == 0 {
            return Err(SkeinError::EmptyLink);
        }
        if c > self.component_budget {
            return Err(SkeinError::ComponentBudget {
                components: c,
                budget: self.component_budget,
            });
        }
        if fd.framing.len() != c {
            return Err(SkeinError::Diagram(DiagramError::Invalid(format!(
                "framing lists {} components, diagram has {c}",
                fd.framing.len()
            ))));
        }

        let mut sum = Laurent2::zero(Ring::Int, ['v', 'z']);
        for mask in 1u32..(1 << c) {
            let keep: BTreeSet<usize> = (0..c).filter(|i| mask >> i & 1 == 1).collect();
            let framings: Vec<i64> = keep.iter().map(|&i| fd.framing[i]).collect();
            let sub = d.sublink(&keep)?;
            let boundary = sub.cable_boundary_components(&framings)?;
            if boundary.n_crossings() > self.budget_p {
                return Err(SkeinError::Budget {
                    invariant: "framed_polynomial",
                    crossings: boundary.n_crossings(),
                    budget: self.budget_p,
                });
            }
            let p = self.p_eval(&boundary)?;
            let sign = if keep.len() % 2 == 1 { -1 } else { 1 };
            sum = sum.add(&p.mul_monomial((0, 0), sign)?)?;
        }

        let bracket = Laurent2::one(Ring::Int, ['v', 'z']).add(&delta_p().mul(&sum)?)?;
        let outer = if c % 2 == 1 { -1 } else { 1 };
        Ok(bracket.mul_monomial((0, 0), outer)?)
    }

    /// Both sides of the mod-2 congruence tying F* to the framed
    /// polynomial: (1 + (v⁻²+v²)z⁻²)·F*(v⁻², z²) and v^{4τ(L)}·{L,0} mod 2.
    pub fn congruence_sides(
        &self,
        d: &LinkDiagram,
    ) -> Result<(Laurent2, Laurent2), SkeinError> {
        let d = d.oriented();
        let fstar = self.kauffman_mod2(&d)?;
        let substituted = fstar
            .scale_exponents('a', -2)?
            .rename_var('a', 'v')?
            .scale_exponents('x', 2)?
            .rename_var('x', 'z')?;
        let multiplier = Laurent2::from_terms(
            Ring::Mod2,
            ['v', 'z'],
            [((0, 0), 1), ((-2, -2), 1), ((2, -2), 1)],
        )?;
        let lhs = multiplier.mul(&substituted)?;

        let zero_framed = FramedDiagram::zero_framed(d.clone());
        let framed = self.framed_polynomial(&zero_framed)?.reduce_mod2();
        let tau = d.total_linking()?;
        let rhs = framed.mul_monomial((4 * tau, 0), 1)?;
        Ok((lhs, rhs))
    }

    pub fn congruence_check(&self, d: &LinkDiagram) -> Result<bool, SkeinError> {
        let (lhs, rhs) = self.congruence_sides(d)?;
        Ok(lhs == rhs)
    }

    // ------------------------------------------------------------------
    // Validation identities (never computation paths)
    // ------------------------------------------------------------------

    /// Validates the one-crossing recursion of F* at a positive crossing:
    /// F*(L₊) = a⁻¹x·F*(L₀) + a⁻²·F*(L₋) + a^{−4p−1}x·F*(L_∞) in case 1
    /// (a^{−4q+1} in case 2), mod 2. Returns `None` when the L_∞ smoothing
    /// has more than one component, where its writhe normalization would
    /// need the figure's re-orientation convention.
    pub fn f_star_relation_check(
        &self,
        d: &LinkDiagram,
        crossing: usize,
    ) -> Result<Option<bool>, SkeinError> {
        let d = d.oriented();
        if d.sign(crossing)? < 0 {
            return Ok(None);
        }
        let l_inf = d.smooth_unoriented(crossing)?;
        if l_inf.components().total() != 1 {
            return Ok(None);
        }
        let exp = match d.crossing_case(crossing)? {
            CrossingCase::Case1 { p } => -4 * p - 1,
            CrossingCase::Case2 { q } => -4 * q + 1,
        };
        let lhs = self.kauffman_mod2(&d)?;
        let t0 = self
            .kauffman_mod2(&d.smooth_oriented(crossing)?)?
            .mul_monomial((-1, 1), 1)?;
        let tm = self
            .kauffman_mod2(&d.switch_crossing(crossing)?)?
            .mul_monomial((-2, 0), 1)?;
        let ti = self.kauffman_mod2(&l_inf)?.mul_monomial((exp, 1), 1)?;
        let rhs = t0.add(&tm)?.add(&ti)?;
        Ok(Some(lhs == rhs))
    }

    /// Validates the G¹ recursion at a positive crossing:
    /// G¹(L₊) = a⁻²G¹(L₋) + a⁻¹G¹(L₀) + a^{−4p−1}G¹(L_∞) in case 1
    /// (a^{−4q+1} in case 2). Same sampling restriction as
    /// [`Self::f_star_relation_check`].
    pub fn g1_relation_check(
        &self,
        d: &LinkDiagram,
        crossing: usize,
    ) -> Result<Option<bool>, SkeinError> {
        let d = d.oriented();
        if d.sign(crossing)? < 0 {
            return Ok(None);
        }
        let l_inf = d.smooth_unoriented(crossing)?;
        if l_inf.components().total() != 1 {
            return Ok(None);
        }
        let exp = match d.crossing_case(crossing)? {
            CrossingCase::Case1 { p } => -4 * p - 1,
            CrossingCase::Case2 { q } => -4 * q + 1,
        };
        let lhs = self.g_poly(&d, 1)?;
        let tm = self
            .g_poly(&d.switch_crossing(crossing)?, 1)?
            .mul_monomial(-2, 1)?;
        let t0 = self
            .g_poly(&d.smooth_oriented(crossing)?, 1)?
            .mul_monomial(-1, 1)?;
        let ti = self.g_poly(&l_inf, 1)?.mul_monomial(exp, 1)?;
        let rhs = tm.add(&t0)?.add(&ti)?;
        Ok(Some(lhs == rhs))
    }
}
