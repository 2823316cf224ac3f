//! Recognizes and parses every object the CLI accepts.
//!
//! The format is inferred from the first token: `braid`, `bands`, `plat`,
//! `pd`, or a leading `{` for JSON. Plats come in two equivalent spellings,
//! an inline header (`plat n=4 bottom=(1 2)(3 4) top=(1 2)(3 4)`) and a
//! sectioned one (`bottom (1,2) (3,4)` on its own line); both are accepted.
//! Parse diagnostics carry 1-based line and column positions.

use qpos::braid::{Band, BandRepresentation, BraidWord, Plat, PlatHalf, PlatPlan};
use qpos::diagram::LinkDiagram;
use qpos::fence::ChargedFence;

/// Any input object, tagged by kind.
pub enum Object {
    Braid(BraidWord),
    Bands(BandRepresentation),
    Plat(Plat),
    Fence(ChargedFence),
    Diagram(LinkDiagram),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Braid(_) => "braid",
            Object::Bands(_) => "bands",
            Object::Plat(_) => "plat",
            Object::Fence(_) => "fence",
            Object::Diagram(_) => "diagram",
        }
    }
}

struct Tok<'a> {
    line: usize,
    col: usize,
    s: &'a str,
}

fn at(t: &Tok, msg: impl AsRef<str>) -> String {
    format!("line {}, column {}: {}", t.line, t.col, msg.as_ref())
}

fn line_tokens(line_no: usize, line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (off, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok { line: line_no, col: s + 1, s: &line[s..off] });
            }
        } else if start.is_none() {
            start = Some(off);
        }
    }
    if let Some(s) = start {
        out.push(Tok { line: line_no, col: s + 1, s: &line[s..] });
    }
    out
}

fn tokens(text: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        out.extend(line_tokens(idx + 1, line));
    }
    out
}

/// Parses one object, inferring its format from the leading token.
pub fn parse_object(text: &str) -> Result<Object, String> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err("empty input".into());
    }
    if trimmed.starts_with('{') {
        return parse_json(text);
    }
    let toks = tokens(text);
    let head = &toks[0];
    match head.s {
        "braid" => parse_braid(&toks).map(Object::Braid),
        "bands" => parse_bands(&toks).map(Object::Bands),
        "plat" => parse_plat(text).map(Object::Plat),
        "pd" => parse_pd(text, &toks).map(Object::Diagram),
        other => Err(at(
            head,
            format!("unknown object header {other:?} (expected braid, bands, plat, pd, or a JSON object)"),
        )),
    }
}

fn parse_json(text: &str) -> Result<Object, String> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("json: {e}"))?;
    match v.get("type").and_then(|t| t.as_str()) {
        Some("braid") => BraidWord::from_json_str(text)
            .map(Object::Braid)
            .map_err(|e| format!("json braid: {e}")),
        Some("bands") => BandRepresentation::from_json_str(text)
            .map(Object::Bands)
            .map_err(|e| format!("json bands: {e}")),
        Some("plat") => Plat::from_json_str(text)
            .map(Object::Plat)
            .map_err(|e| format!("json plat: {e}")),
        Some(other) => Err(format!("json: unknown object type {other:?}")),
        None if v.get("posts").is_some() => ChargedFence::from_json_str(text)
            .map(Object::Fence)
            .map_err(|e| format!("json fence: {e}")),
        None => Err("json: expected a \"type\" tag (braid, bands, plat) or a fence with \"posts\"".into()),
    }
}

fn header_n(toks: &[Tok], kind: &str) -> Result<usize, String> {
    let t = toks
        .get(1)
        .ok_or_else(|| at(&toks[0], format!("missing n=<strands> after {kind:?}")))?;
    t.s.strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| at(t, format!("expected n=<strands>, got {:?}", t.s)))
}

fn parse_braid(toks: &[Tok]) -> Result<BraidWord, String> {
    let n = header_n(toks, "braid")?;
    let mut letters = Vec::new();
    for t in &toks[2..] {
        let v: i32 = t
            .s
            .parse()
            .map_err(|_| at(t, format!("expected a braid letter, got {:?}", t.s)))?;
        letters.push(v);
    }
    BraidWord::new(n, letters).map_err(|e| at(&toks[0], e.to_string()))
}

fn parse_bands(toks: &[Tok]) -> Result<BandRepresentation, String> {
    let n = header_n(toks, "bands")?;
    let mut bands = Vec::new();
    for t in &toks[2..] {
        bands.push(parse_band_tok(t, n)?);
    }
    BandRepresentation::new(n, bands).map_err(|e| at(&toks[0], e.to_string()))
}

fn parse_band_tok(t: &Tok, n: usize) -> Result<Band, String> {
    let bad = || at(t, format!("expected (i,j,+) or (i,j,-), got {:?}", t.s));
    let inner = t
        .s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let i: usize = parts[0].trim().parse().map_err(|_| bad())?;
    let j: usize = parts[1].trim().parse().map_err(|_| bad())?;
    let sign = match parts[2].trim() {
        "+" => 1,
        "-" => -1,
        _ => return Err(bad()),
    };
    Band::new(i, j, sign, n).map_err(|e| at(t, e.to_string()))
}

fn parse_plat(text: &str) -> Result<Plat, String> {
    let (h_idx, header) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| "empty input".to_string())?;
    if header.contains("bottom=") {
        parse_plat_inline(text, h_idx, header)
    } else {
        parse_plat_sections(text, h_idx)
    }
}

/// Inline form: every key lives on the header line, pairs may contain
/// spaces, and the following lines hold the word.
fn parse_plat_inline(text: &str, h_idx: usize, header: &str) -> Result<Plat, String> {
    let hl = h_idx + 1;
    let hb: Vec<char> = header.chars().collect();
    let err = |col: usize, msg: String| format!("line {hl}, column {}: {msg}", col + 1);
    let mut i = 0usize;
    let skip_ws = |i: &mut usize| {
        while *i < hb.len() && hb[*i].is_whitespace() {
            *i += 1;
        }
    };

    skip_ws(&mut i);
    let start = i;
    while i < hb.len() && !hb[i].is_whitespace() {
        i += 1;
    }
    let word: String = hb[start..i].iter().collect();
    if word != "plat" {
        return Err(err(start, format!("expected \"plat\", got {word:?}")));
    }

    let mut n: Option<usize> = None;
    let mut bottom: Option<(usize, Vec<(usize, usize)>)> = None;
    let mut top: Option<(usize, Vec<(usize, usize)>)> = None;
    loop {
        skip_ws(&mut i);
        if i >= hb.len() {
            break;
        }
        let kstart = i;
        while i < hb.len() && hb[i] != '=' && !hb[i].is_whitespace() {
            i += 1;
        }
        let key: String = hb[kstart..i].iter().collect();
        if i >= hb.len() || hb[i] != '=' {
            return Err(err(kstart, format!("expected key=value, got {key:?}")));
        }
        i += 1;
        match key.as_str() {
            "n" => {
                let vstart = i;
                while i < hb.len() && !hb[i].is_whitespace() {
                    i += 1;
                }
                let v: String = hb[vstart..i].iter().collect();
                n = Some(
                    v.parse()
                        .map_err(|_| err(vstart, format!("expected a strand count, got {v:?}")))?,
                );
            }
            "bottom" | "top" => {
                let mut pairs = Vec::new();
                loop {
                    let save = i;
                    skip_ws(&mut i);
                    if i >= hb.len() || hb[i] != '(' {
                        i = save;
                        break;
                    }
                    let gstart = i;
                    i += 1;
                    let cstart = i;
                    while i < hb.len() && hb[i] != ')' {
                        i += 1;
                    }
                    if i >= hb.len() {
                        return Err(err(gstart, "unclosed pair: missing ')'".into()));
                    }
                    let inner: String = hb[cstart..i].iter().collect();
                    i += 1;
                    pairs.push(parse_pair(&inner, || err(gstart, format!("expected a pair of strand indices, got ({inner})")))?);
                }
                if pairs.is_empty() {
                    return Err(err(kstart, format!("{key}= lists no pairs")));
                }
                if key == "bottom" {
                    bottom = Some((kstart, pairs));
                } else {
                    top = Some((kstart, pairs));
                }
            }
            other => {
                return Err(err(kstart, format!("unknown key {other:?} (expected n, bottom, top)")))
            }
        }
    }
    let n = n.ok_or_else(|| err(0, "missing n=<strands>".into()))?;
    let (bcol, bpairs) = bottom.ok_or_else(|| err(0, "missing bottom=<pairs>".into()))?;
    let (tcol, tpairs) = top.ok_or_else(|| err(0, "missing top=<pairs>".into()))?;

    let mut letters = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if idx <= h_idx {
            continue;
        }
        for t in line_tokens(idx + 1, line) {
            let v: i32 = t
                .s
                .parse()
                .map_err(|_| at(&t, format!("expected a braid letter, got {:?}", t.s)))?;
            letters.push(v);
        }
    }
    build_plat(n, bpairs, tpairs, letters, (hl, bcol + 1), (hl, tcol + 1), hl)
}

/// A parsed `bottom`/`top` section: the (line, column) it starts at, then
/// its pairs.
type PairSection = ((usize, usize), Vec<(usize, usize)>);

/// Sectioned form: `plat n=N`, then `bottom`, `top`, and `word` lines.
fn parse_plat_sections(text: &str, h_idx: usize) -> Result<Plat, String> {
    let mut n: Option<usize> = None;
    let mut bottom: Option<PairSection> = None;
    let mut top: Option<PairSection> = None;
    let mut letters = Vec::new();
    let mut header_line = h_idx + 1;
    for (idx, line) in text.lines().enumerate() {
        let toks = line_tokens(idx + 1, line);
        if toks.is_empty() {
            continue;
        }
        match toks[0].s {
            "plat" => {
                header_line = idx + 1;
                n = Some(header_n(&toks, "plat")?);
            }
            "bottom" | "top" => {
                let mut pairs = Vec::new();
                for t in &toks[1..] {
                    let inner = t
                        .s
                        .strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .ok_or_else(|| at(t, format!("expected (a,b), got {:?}", t.s)))?;
                    pairs.push(parse_pair(inner, || {
                        at(t, format!("expected a pair of strand indices, got {:?}", t.s))
                    })?);
                }
                if pairs.is_empty() {
                    return Err(at(&toks[0], format!("{} lists no pairs", toks[0].s)));
                }
                let pos = (toks[0].line, toks[0].col);
                if toks[0].s == "bottom" {
                    bottom = Some((pos, pairs));
                } else {
                    top = Some((pos, pairs));
                }
            }
            "word" => {
                for t in &toks[1..] {
                    let v: i32 = t
                        .s
                        .parse()
                        .map_err(|_| at(t, format!("expected a braid letter, got {:?}", t.s)))?;
                    letters.push(v);
                }
            }
            other => {
                return Err(at(
                    &toks[0],
                    format!("unknown plat section {other:?} (expected bottom, top, word)"),
                ))
            }
        }
    }
    let n = n.ok_or_else(|| format!("line {header_line}: missing plat n=<strands> header"))?;
    let (bpos, bpairs) =
        bottom.ok_or_else(|| format!("line {header_line}: missing bottom line"))?;
    let (tpos, tpairs) = top.ok_or_else(|| format!("line {header_line}: missing top line"))?;
    build_plat(n, bpairs, tpairs, letters, bpos, tpos, header_line)
}

fn parse_pair(inner: &str, bad: impl Fn() -> String) -> Result<(usize, usize), String> {
    let nums: Vec<&str> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if nums.len() != 2 {
        return Err(bad());
    }
    let a: usize = nums[0].parse().map_err(|_| bad())?;
    let b: usize = nums[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn build_plat(
    n: usize,
    bottom_pairs: Vec<(usize, usize)>,
    top_pairs: Vec<(usize, usize)>,
    letters: Vec<i32>,
    bpos: (usize, usize),
    tpos: (usize, usize),
    header_line: usize,
) -> Result<Plat, String> {
    let bottom = PlatHalf::new(bottom_pairs, n)
        .map_err(|e| format!("line {}, column {}: {e}", bpos.0, bpos.1))?;
    let top = PlatHalf::new(top_pairs, n)
        .map_err(|e| format!("line {}, column {}: {e}", tpos.0, tpos.1))?;
    let word = BraidWord::new(n, letters).map_err(|e| format!("line {header_line}: {e}"))?;
    let plan = PlatPlan::new(n, bottom, top).map_err(|e| format!("line {header_line}: {e}"))?;
    Plat::new(word, plan).map_err(|e| format!("line {header_line}: {e}"))
}

/// Token-shape validation with positions, then semantic parsing by the
/// library.
fn parse_pd(text: &str, toks: &[Tok]) -> Result<LinkDiagram, String> {
    let mut mode = "x";
    for t in &toks[1..] {
        match t.s {
            "signs" => mode = "signs",
            "loops" => mode = "loops",
            s => match mode {
                "x" => {
                    let ok = s
                        .strip_prefix("X[")
                        .and_then(|r| r.strip_suffix(']'))
                        .map(|inner| {
                            inner.split(',').filter(|p| p.trim().parse::<usize>().is_ok()).count() == 4
                                && inner.split(',').count() == 4
                        })
                        .unwrap_or(false);
                    if !ok {
                        return Err(at(t, format!("expected X[a,b,c,d], got {s:?}")));
                    }
                }
                "signs" => {
                    if s != "+" && s != "-" {
                        return Err(at(t, format!("expected + or -, got {s:?}")));
                    }
                }
                _ => {
                    if s.parse::<usize>().is_err() {
                        return Err(at(t, format!("expected a loop count, got {s:?}")));
                    }
                }
            },
        }
    }
    LinkDiagram::from_pd_string(text).map_err(|e| format!("pd: {e}"))
}
