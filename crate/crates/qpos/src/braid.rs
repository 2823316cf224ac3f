//! Braid words, band representations, and plat closures.
//!
//! Letters are nonzero integers: `i` means σᵢ, `-i` means σᵢ⁻¹, with
//! 1 ≤ i ≤ n−1 on n strands. A band σ_{i,j} expands to the conjugate word
//! (σᵢ…σ_{j−2}) σ_{j−1}^{±1} (σ_{j−2}⁻¹…σᵢ⁻¹). Plat plans are pairs of
//! non-crossing perfect matchings used to cap a braidword above and below.
//!
//! No braid-group algebra happens here: equality of braids is never decided,
//! only diagrams of closures are produced.

use crate::diagram::{dart, Dart, LinkDiagram};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("letter {letter} does not fit in {strands} strands")]
    BadLetter { letter: i32, strands: usize },
    #[error("band ({i},{j}) does not satisfy 1 <= i < j <= {strands}")]
    BadBand { i: usize, j: usize, strands: usize },
    #[error("invalid plat plan: {0}")]
    BadPlan(String),
    #[error("plat plan on {plan} points does not match {strands} strands")]
    StrandMismatch { plan: usize, strands: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::Parse("braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::BadLetter { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// The permutation of strand positions induced by the word (0-based;
    /// entry `p` is where the strand starting at position `p` ends up).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        // perm currently maps final position -> start; invert.
        let mut out = vec![0; self.strands];
        for (end, &start) in perm.iter().enumerate() {
            out[start] = end;
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("braid n={}\n", self.strands);
        let letters: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        s.push_str(&letters.join(" "));
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self, BraidError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| BraidError::Parse("empty input".into()))?;
        let n = parse_header(header, "braid")?;
        let mut letters = Vec::new();
        for line in lines {
            for tok in line.split_whitespace() {
                let l: i32 = tok
                    .parse()
                    .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
                letters.push(l);
            }
        }
        BraidWord::new(n, letters)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&BraidJson {
            kind: "braid".into(),
            n: self.strands,
            letters: self.letters.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, BraidError> {
        let j: BraidJson =
            serde_json::from_str(s).map_err(|e| BraidError::Parse(e.to_string()))?;
        if j.kind != "braid" {
            return Err(BraidError::Parse(format!("expected braid, got {:?}", j.kind)));
        }
        BraidWord::new(j.n, j.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    #[serde(rename = "type")]
    kind: String,
    n: usize,
    letters: Vec<i32>,
}

/// The band generator σ_{i,j}^{±1} of the n-strand braid group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl Band {
    pub fn new(i: usize, j: usize, sign: i8, strands: usize) -> Result<Self, BraidError> {
        if i < 1 || i >= j || j > strands || (sign != 1 && sign != -1) {
            return Err(BraidError::BadBand { i, j, strands });
        }
        Ok(Band { i, j, sign })
    }

    /// (σᵢ…σ_{j−2}) σ_{j−1}^sign (σ_{j−2}⁻¹…σᵢ⁻¹); for j = i+1 just σᵢ^sign.
    pub fn to_word(self, strands: usize) -> BraidWord {
        let mut letters = Vec::new();
        for t in self.i..=self.j.saturating_sub(2) {
            letters.push(t as i32);
        }
        letters.push(self.sign as i32 * (self.j as i32 - 1));
        for t in (self.i..=self.j.saturating_sub(2)).rev() {
            letters.push(-(t as i32));
        }
        BraidWord::new(strands, letters).expect("band letters fit by construction")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandRepresentation {
    strands: usize,
    bands: Vec<Band>,
}

impl BandRepresentation {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self, BraidError> {
        for b in &bands {
            Band::new(b.i, b.j, b.sign, strands)?;
        }
        Ok(BandRepresentation { strands, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn is_quasipositive(&self) -> bool {
        self.bands.iter().all(|b| b.sign > 0)
    }

    /// Signed band count; equals the exponent sum of the expanded word.
    pub fn exponent_sum(&self) -> i64 {
        self.bands.iter().map(|b| b.sign as i64).sum()
    }

    pub fn expanded_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for b in &self.bands {
            letters.extend_from_slice(b.to_word(self.strands).letters());
        }
        BraidWord::new(self.strands, letters).expect("validated bands")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("bands n={}\n", self.strands);
        let bands: Vec<String> = self
            .bands
            .iter()
            .map(|b| format!("({},{},{})", b.i, b.j, if b.sign > 0 { '+' } else { '-' }))
            .collect();
        s.push_str(&bands.join(" "));
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self, BraidError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| BraidError::Parse("empty input".into()))?;
        let n = parse_header(header, "bands")?;
        let mut bands = Vec::new();
        for line in lines {
            for tok in line.split_whitespace() {
                bands.push(parse_band(tok, n)?);
            }
        }
        BandRepresentation::new(n, bands)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&BandsJson {
            kind: "bands".into(),
            n: self.strands,
            bands: self.bands.iter().map(|b| (b.i, b.j, b.sign)).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, BraidError> {
        let j: BandsJson =
            serde_json::from_str(s).map_err(|e| BraidError::Parse(e.to_string()))?;
        if j.kind != "bands" {
            return Err(BraidError::Parse(format!("expected bands, got {:?}", j.kind)));
        }
        let bands = j
            .bands
            .into_iter()
            .map(|(i, jj, sign)| Band::new(i, jj, sign, j.n))
            .collect::<Result<Vec<_>, _>>()?;
        BandRepresentation::new(j.n, bands)
    }
}

#[derive(Serialize, Deserialize)]
struct BandsJson {
    #[serde(rename = "type")]
    kind: String,
    n: usize,
    bands: Vec<(usize, usize, i8)>,
}

fn parse_band(tok: &str, strands: usize) -> Result<Band, BraidError> {
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| BraidError::Parse(format!("bad band {tok:?}")))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(BraidError::Parse(format!("bad band {tok:?}")));
    }
    let i: usize = parts[0]
        .parse()
        .map_err(|_| BraidError::Parse(format!("bad band {tok:?}")))?;
    let j: usize = parts[1]
        .parse()
        .map_err(|_| BraidError::Parse(format!("bad band {tok:?}")))?;
    let sign = match parts[2] {
        "+" => 1,
        "-" => -1,
        _ => return Err(BraidError::Parse(format!("bad band sign in {tok:?}"))),
    };
    Band::new(i, j, sign, strands)
}

fn parse_header(line: &str, kind: &str) -> Result<usize, BraidError> {
    let line = line.trim();
    let rest = line
        .strip_prefix(kind)
        .ok_or_else(|| BraidError::Parse(format!("expected {kind:?} header, got {line:?}")))?
        .trim();
    let n = rest
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| BraidError::Parse(format!("bad header {line:?}")))?;
    Ok(n)
}

/// One half of a plat plan: a non-crossing perfect matching of {1..n},
/// stored as pairs (a,b) with a < b, sorted by a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatHalf {
    pairs: Vec<(usize, usize)>,
}

impl PlatHalf {
    /// Validates: a fixed-point-free involution of {1..n} whose chord
    /// diagram is non-crossing (s < t < π(s) implies s < π(t) < π(s)).
    pub fn new(pairs: Vec<(usize, usize)>, n: usize) -> Result<Self, BraidError> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(BraidError::BadPlan(format!("{n} points (must be even and positive)")));
        }
        if pairs.len() != n / 2 {
            return Err(BraidError::BadPlan(format!(
                "{} pairs cannot match {n} points",
                pairs.len()
            )));
        }
        let mut partner = vec![0usize; n + 1];
        for &(a, b) in &pairs {
            if a == b {
                return Err(BraidError::BadPlan(format!("fixed point {a}")));
            }
            for x in [a, b] {
                if x < 1 || x > n {
                    return Err(BraidError::BadPlan(format!("index {x} out of range")));
                }
                if partner[x] != 0 {
                    return Err(BraidError::BadPlan(format!("index {x} matched twice")));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        for s in 1..=n {
            for t in (s + 1)..partner[s] {
                if !(s < partner[t] && partner[t] < partner[s]) {
                    return Err(BraidError::BadPlan(format!(
                        "chords at {s} and {t} cross"
                    )));
                }
            }
        }
        let mut pairs: Vec<(usize, usize)> =
            pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        Ok(PlatHalf { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn partner_table(&self, n: usize) -> Vec<usize> {
        let mut partner = vec![0usize; n + 1];
        for &(a, b) in &self.pairs {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }
}

/// A plat plan: bottom and top cap matchings on the same even strand count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatPlan {
    pub n: usize,
    pub bottom: PlatHalf,
    pub top: PlatHalf,
}

impl PlatPlan {
    pub fn new(n: usize, bottom: PlatHalf, top: PlatHalf) -> Result<Self, BraidError> {
        if bottom.pairs.len() * 2 != n || top.pairs.len() * 2 != n {
            return Err(BraidError::StrandMismatch {
                plan: bottom.pairs.len().max(top.pairs.len()) * 2,
                strands: n,
            });
        }
        Ok(PlatPlan { n, bottom, top })
    }
}

/// A braidword together with the plan that caps it into a plat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plat {
    pub word: BraidWord,
    pub plan: PlatPlan,
}

impl Plat {
    pub fn new(word: BraidWord, plan: PlatPlan) -> Result<Self, BraidError> {
        if word.strands() != plan.n {
            return Err(BraidError::StrandMismatch {
                plan: plan.n,
                strands: word.strands(),
            });
        }
        Ok(Plat { word, plan })
    }

    pub fn to_text(&self) -> String {
        let fmt_half = |h: &PlatHalf| {
            h.pairs
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = format!("plat n={}\n", self.plan.n);
        s.push_str(&format!("bottom {}\n", fmt_half(&self.plan.bottom)));
        s.push_str(&format!("top {}\n", fmt_half(&self.plan.top)));
        s.push_str("word");
        for l in self.word.letters() {
            s.push_str(&format!(" {l}"));
        }
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self, BraidError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| BraidError::Parse("empty input".into()))?;
        let n = parse_header(header, "plat")?;
        let mut bottom = None;
        let mut top = None;
        let mut letters: Option<Vec<i32>> = None;
        for line in lines {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("bottom") {
                bottom = Some(parse_pairs(rest, n)?);
            } else if let Some(rest) = line.strip_prefix("top") {
                top = Some(parse_pairs(rest, n)?);
            } else if let Some(rest) = line.strip_prefix("word") {
                let mut ls = Vec::new();
                for tok in rest.split_whitespace() {
                    ls.push(
                        tok.parse::<i32>()
                            .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?,
                    );
                }
                letters = Some(ls);
            } else {
                return Err(BraidError::Parse(format!("unexpected line {line:?}")));
            }
        }
        let bottom = bottom.ok_or_else(|| BraidError::Parse("missing bottom line".into()))?;
        let top = top.ok_or_else(|| BraidError::Parse("missing top line".into()))?;
        let letters = letters.ok_or_else(|| BraidError::Parse("missing word line".into()))?;
        let word = BraidWord::new(n, letters)?;
        Plat::new(word, PlatPlan::new(n, bottom, top)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PlatJson {
            kind: "plat".into(),
            n: self.plan.n,
            bottom: self.plan.bottom.pairs.clone(),
            top: self.plan.top.pairs.clone(),
            letters: self.word.letters().to_vec(),
        })
        .expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, BraidError> {
        let j: PlatJson =
            serde_json::from_str(s).map_err(|e| BraidError::Parse(e.to_string()))?;
        if j.kind != "plat" {
            return Err(BraidError::Parse(format!("expected plat, got {:?}", j.kind)));
        }
        let word = BraidWord::new(j.n, j.letters)?;
        let plan = PlatPlan::new(j.n, PlatHalf::new(j.bottom, j.n)?, PlatHalf::new(j.top, j.n)?)?;
        Plat::new(word, plan)
    }

    pub fn diagram(&self) -> LinkDiagram {
        plat_diagram(&self.word, &self.plan).expect("plat validated at construction")
    }
}

#[derive(Serialize, Deserialize)]
struct PlatJson {
    #[serde(rename = "type")]
    kind: String,
    n: usize,
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    letters: Vec<i32>,
}

fn parse_pairs(rest: &str, n: usize) -> Result<PlatHalf, BraidError> {
    let mut pairs = Vec::new();
    for tok in rest.split_whitespace() {
        let inner = tok
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| BraidError::Parse(format!("bad pair {tok:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 2 {
            return Err(BraidError::Parse(format!("bad pair {tok:?}")));
        }
        let a: usize = parts[0]
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad pair {tok:?}")))?;
        let b: usize = parts[1]
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad pair {tok:?}")))?;
        pairs.push((a, b));
    }
    PlatHalf::new(pairs, n)
}

/// Per-letter port layout. A positive letter's crossing sits with under-entry
/// at bottom-left; the negative letter is its horizontal mirror.
fn letter_ports(letter: i32) -> (u8, u8, u8, u8) {
    if letter > 0 {
        // (in_left, in_right, out_left, out_right)
        (0, 1, 3, 2)
    } else {
        (3, 0, 2, 1)
    }
}

struct ColumnState {
    /// Port waiting at the top of each strand column.
    dangling: Vec<Option<Dart>>,
    /// First port created at the bottom of each column.
    bottom: Vec<Option<Dart>>,
    mate: Vec<Dart>,
    flags: Vec<bool>,
}

impl ColumnState {
    fn new(strands: usize, letters: usize) -> Self {
        ColumnState {
            dangling: vec![None; strands],
            bottom: vec![None; strands],
            mate: vec![Dart::MAX; letters * 4],
            flags: vec![false; letters * 4],
        }
    }

    /// Wires a flow edge `from -> to` (used for the upward braid flow).
    fn wire(&mut self, from: Dart, to: Dart) {
        self.mate[from as usize] = to;
        self.mate[to as usize] = from;
        self.flags[to as usize] = true;
    }

    fn run_letters(&mut self, letters: &[i32]) {
        for (c, &letter) in letters.iter().enumerate() {
            let i = letter.unsigned_abs() as usize - 1;
            let (in_l, in_r, out_l, out_r) = letter_ports(letter);
            for (col, slot) in [(i, in_l), (i + 1, in_r)] {
                let v = dart(c, slot);
                match self.dangling[col] {
                    Some(u) => self.wire(u, v),
                    None => self.bottom[col] = Some(v),
                }
            }
            self.dangling[i] = Some(dart(c, out_l));
            self.dangling[i + 1] = Some(dart(c, out_r));
        }
    }
}

/// Diagram of the closed braid with the canonical (all strands upward)
/// orientation. Strand columns never entered by a letter close into split
/// circles.
pub fn closed_braid_diagram(w: &BraidWord) -> LinkDiagram {
    let mut st = ColumnState::new(w.strands(), w.letters().len());
    st.run_letters(w.letters());
    let mut loops = 0usize;
    for p in 0..w.strands() {
        match (st.dangling[p], st.bottom[p]) {
            (Some(u), Some(v)) => st.wire(u, v),
            (None, None) => loops += 1,
            _ => unreachable!("a column is touched at top iff touched at bottom"),
        }
    }
    LinkDiagram::from_mates(st.mate, loops)
        .expect("closure wiring is an involution")
        .with_orientation(st.flags)
        .expect("upward flow is coherent")
}

/// Diagram of the Π-plat: the braidword capped below by `plan.bottom` arcs
/// and above by `plan.top` arcs. The result is unoriented.
pub fn plat_diagram(w: &BraidWord, plan: &PlatPlan) -> Result<LinkDiagram, BraidError> {
    if w.strands() != plan.n {
        return Err(BraidError::StrandMismatch { plan: plan.n, strands: w.strands() });
    }
    let n = plan.n;
    let mut st = ColumnState::new(n, w.letters().len());
    st.run_letters(w.letters());

    // Symbolic endpoints: node 2p is the bottom of column p, 2p+1 its top.
    // Cap arcs join like endpoints; empty columns join their own two ends.
    let bottom_partner = plan.bottom.partner_table(n);
    let top_partner = plan.top.partner_table(n);
    let arc = |node: usize| -> usize {
        let col = node / 2;
        if node.is_multiple_of(2) {
            (bottom_partner[col + 1] - 1) * 2
        } else {
            (top_partner[col + 1] - 1) * 2 + 1
        }
    };
    let port = |st: &ColumnState, node: usize| -> Option<Dart> {
        let col = node / 2;
        if node.is_multiple_of(2) {
            st.bottom[col]
        } else {
            st.dangling[col]
        }
    };
    let other_side = |node: usize| node ^ 1;

    let mut visited = vec![false; 2 * n];
    let mut pending: Vec<(Dart, Dart)> = Vec::new();
    // Paths between dart-bearing columns.
    for start in 0..2 * n {
        if visited[start] || port(&st, start).is_none() {
            continue;
        }
        visited[start] = true;
        let mut cur = arc(start);
        loop {
            visited[cur] = true;
            if let Some(d) = port(&st, cur) {
                pending.push((port(&st, start).unwrap(), d));
                break;
            }
            cur = other_side(cur);
            visited[cur] = true;
            cur = arc(cur);
        }
    }
    for (a, b) in pending {
        st.mate[a as usize] = b;
        st.mate[b as usize] = a;
    }
    // Remaining cycles run through empty columns only: split circles.
    let mut loops = 0usize;
    for start in 0..2 * n {
        if visited[start] {
            continue;
        }
        let mut cur = start;
        loop {
            visited[cur] = true;
            cur = other_side(cur);
            visited[cur] = true;
            cur = arc(cur);
            if cur == start {
                break;
            }
        }
        loops += 1;
    }
    LinkDiagram::from_mates(st.mate, loops)
        .map_err(|e| BraidError::Parse(format!("internal plat wiring error: {e}")))
}

/// Embeds the closed braid of `w` (on n strands) as a plat on 2n strands:
/// the same letters, capped by π_⊔ = π_⊓ = (1 2n)(2 2n−1)…(n n+1).
pub fn braid_as_plat(w: &BraidWord) -> Plat {
    let n = w.strands();
    let word = BraidWord::new(2 * n, w.letters().to_vec()).expect("letters fit in 2n strands");
    let pairs: Vec<(usize, usize)> = (1..=n).map(|k| (k, 2 * n + 1 - k)).collect();
    let half = PlatHalf::new(pairs, 2 * n).expect("round-trip caps are non-crossing");
    let plan = PlatPlan::new(2 * n, half.clone(), half).expect("matched sizes");
    Plat::new(word, plan).expect("matched strand counts")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_validation() {
        assert!(BraidWord::new(3, vec![1, 2, -1]).is_ok());
        assert_eq!(
            BraidWord::new(3, vec![3]),
            Err(BraidError::BadLetter { letter: 3, strands: 3 })
        );
        assert!(BraidWord::new(2, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::new(2, vec![1, 1, 1]).unwrap().exponent_sum(), 3);
        assert_eq!(BraidWord::new(3, vec![1, -2]).unwrap().exponent_sum(), 0);
        let b = BandRepresentation::new(
            4,
            vec![
                Band::new(1, 3, 1, 4).unwrap(),
                Band::new(2, 4, 1, 4).unwrap(),
                Band::new(1, 2, -1, 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(b.exponent_sum(), 1);
        assert_eq!(b.expanded_word().exponent_sum(), 1);
        assert!(!b.is_quasipositive());
    }

    #[test]
    fn band_expansion() {
        let b = Band::new(1, 2, 1, 3).unwrap();
        assert_eq!(b.to_word(3).letters(), &[1]);
        let b = Band::new(1, 3, 1, 3).unwrap();
        assert_eq!(b.to_word(3).letters(), &[1, 2, -1]);
        let b = Band::new(1, 3, -1, 3).unwrap();
        assert_eq!(b.to_word(3).letters(), &[1, -2, -1]);
        let b = Band::new(2, 5, 1, 6).unwrap();
        assert_eq!(b.to_word(6).letters(), &[2, 3, 4, -3, -2]);
    }

    #[test]
    fn permutation_and_components() {
        let w = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(w.permutation(), vec![0, 1]); // σ1² is a pure braid
        let d = closed_braid_diagram(&w);
        assert_eq!(d.components().total(), 2);
        let w3 = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(w3.permutation(), vec![1, 0]);
        assert_eq!(closed_braid_diagram(&w3).components().total(), 1);
    }

    #[test]
    fn empty_word_closures() {
        let d = closed_braid_diagram(&BraidWord::new(1, vec![]).unwrap());
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.components().total(), 1);
    }

    #[test]
    fn plat_plan_validation() {
        assert!(PlatHalf::new(vec![(1, 2), (3, 4)], 4).is_ok());
        assert!(PlatHalf::new(vec![(1, 4), (2, 3)], 4).is_ok());
        let crossed = PlatHalf::new(vec![(1, 3), (2, 4)], 4);
        assert!(matches!(crossed, Err(BraidError::BadPlan(_))));
        assert!(PlatHalf::new(vec![(1, 1), (2, 3)], 4).is_err());
        assert!(PlatHalf::new(vec![(1, 2), (1, 3)], 4).is_err());
        assert!(PlatHalf::new(vec![(1, 2)], 4).is_err());
    }

    #[test]
    fn empty_plat_is_unknot() {
        let half = PlatHalf::new(vec![(1, 2)], 2).unwrap();
        let plan = PlatPlan::new(2, half.clone(), half).unwrap();
        let d = plat_diagram(&BraidWord::new(2, vec![]).unwrap(), &plan).unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn fig9_style_plat() {
        let half = PlatHalf::new(vec![(1, 2), (3, 4)], 4).unwrap();
        let plan = PlatPlan::new(4, half.clone(), half).unwrap();
        let w = BraidWord::new(4, vec![2, 1, 1, 3, 3, 2]).unwrap();
        let d = plat_diagram(&w, &plan).unwrap();
        assert_eq!(d.n_crossings(), 6);
        assert_eq!(d.free_loops(), 0);
        // The word's permutation is trivial, so the caps close two circles:
        // this is the 2-component boundary of an annulus.
        assert_eq!(d.components().total(), 2);
    }

    #[test]
    fn pretzel_plat_shape() {
        // 𝒫(3,5,2): plat of σ1³σ3⁵σ5² with caps (1 6)(2 3)(4 5).
        let half = PlatHalf::new(vec![(1, 6), (2, 3), (4, 5)], 6).unwrap();
        let plan = PlatPlan::new(6, half.clone(), half).unwrap();
        let mut letters = vec![1; 3];
        letters.extend(vec![3; 5]);
        letters.extend(vec![5; 2]);
        let w = BraidWord::new(6, letters).unwrap();
        let d = plat_diagram(&w, &plan).unwrap();
        assert_eq!(d.n_crossings(), 10);
        assert_eq!(d.components().total(), 1);
    }

    #[test]
    fn braid_as_plat_matches_closure_shape() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let plat = braid_as_plat(&w);
        assert_eq!(plat.plan.n, 4);
        assert_eq!(plat.plan.bottom.pairs(), &[(1, 4), (2, 3)]);
        let d = plat.diagram();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.components().total(), 1);
        // Same underlying knot as the closure: compare unoriented codes.
        let closure = closed_braid_diagram(&w).forget_orientation();
        assert_eq!(
            d.canonical_code().unwrap(),
            closure.canonical_code().unwrap()
        );
    }

    #[test]
    fn text_round_trips() {
        let w = BraidWord::new(3, vec![1, 1, -2]).unwrap();
        let t = w.to_text();
        assert_eq!(t, "braid n=3\n1 1 -2\n");
        assert_eq!(BraidWord::from_text(&t).unwrap(), w);
        assert_eq!(BraidWord::from_json_str(&w.to_json_string()).unwrap(), w);

        let b = BandRepresentation::new(
            4,
            vec![Band::new(1, 3, 1, 4).unwrap(), Band::new(2, 4, -1, 4).unwrap()],
        )
        .unwrap();
        let t = b.to_text();
        assert_eq!(t, "bands n=4\n(1,3,+) (2,4,-)\n");
        assert_eq!(BandRepresentation::from_text(&t).unwrap(), b);
        assert_eq!(BandRepresentation::from_json_str(&b.to_json_string()).unwrap(), b);

        let plat = braid_as_plat(&BraidWord::new(2, vec![1, -1]).unwrap());
        let t = plat.to_text();
        assert_eq!(Plat::from_text(&t).unwrap(), plat);
        assert_eq!(Plat::from_json_str(&plat.to_json_string()).unwrap(), plat);
    }

    #[test]
    fn closure_writhe_equals_exponent_sum() {
        for (n, letters) in [
            (2, vec![1, 1, 1]),
            (3, vec![1, -2, 1, 2]),
            (4, vec![1, 2, 3, -1, -2, 3]),
        ] {
            let w = BraidWord::new(n, letters).unwrap();
            let d = closed_braid_diagram(&w);
            assert_eq!(d.writhe().unwrap(), w.exponent_sum());
        }
    }
}
