//! Deterministic SVG renderings.
//!
//! Fences: posts are vertical lines, wires horizontal ones; a post is broken
//! where a wire passes over it, and every wire carries its charge as a +/-
//! label. Braids and plats: one column per strand, one row per letter, the
//! under-strand broken at each crossing, cups and caps as arcs. All
//! coordinates are integers, so identical inputs give byte-identical output.

use qpos::braid::{BraidWord, PlatPlan};
use qpos::fence::ChargedFence;
use std::fmt::Write;

const FENCE_SX: i64 = 48;
const FENCE_SY: i64 = 36;
const FENCE_MARGIN: i64 = 40;
const BRAID_SX: i64 = 40;
const BRAID_SY: i64 = 40;
const BRAID_MARGIN: i64 = 30;

fn svg_open(s: &mut String, w: i64, h: i64) {
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(s, r#"<g stroke="black" stroke-width="2" fill="none">"#).unwrap();
}

fn svg_close(s: &mut String) {
    s.push_str("</g>\n</svg>\n");
}

pub fn fence_svg(cf: &ChargedFence) -> String {
    let fence = cf.fence.renumbered();
    let charges = cf.charges();
    let max_x = fence.posts().iter().map(|p| p.x).max().unwrap_or(1);
    let mut max_y = 1;
    for p in fence.posts() {
        max_y = max_y.max(p.y1);
    }
    for w in fence.wires() {
        max_y = max_y.max(w.y);
    }
    let width = 2 * FENCE_MARGIN + (max_x - 1) * FENCE_SX;
    let height = 2 * FENCE_MARGIN + (max_y - 1) * FENCE_SY;
    let px = |x: i64| FENCE_MARGIN + (x - 1) * FENCE_SX;
    let py = |y: i64| height - FENCE_MARGIN - (y - 1) * FENCE_SY;

    let mut s = String::new();
    svg_open(&mut s, width, height);
    for p in fence.posts() {
        if p.y0 == p.y1 {
            writeln!(
                s,
                r#"<circle class="post" cx="{}" cy="{}" r="3" fill="black"/>"#,
                px(p.x),
                py(p.y0)
            )
            .unwrap();
            continue;
        }
        // the post is interrupted under every wire that crosses it strictly
        let mut cuts: Vec<i64> = fence
            .wires()
            .iter()
            .filter(|w| w.y > p.y0 && w.y < p.y1 && w.x0 < p.x && p.x < w.x1)
            .map(|w| w.y)
            .collect();
        cuts.sort_unstable();
        let gap = 7;
        let mut bottom = py(p.y0);
        let mut segments = Vec::new();
        for &cy in &cuts {
            let c = py(cy);
            segments.push((bottom, c + gap));
            bottom = c - gap;
        }
        segments.push((bottom, py(p.y1)));
        for (lo, hi) in segments {
            if lo > hi {
                writeln!(
                    s,
                    r#"<line class="post" x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                    px(p.x),
                    lo,
                    hi
                )
                .unwrap();
            }
        }
    }
    for (w, &c) in fence.wires().iter().zip(charges) {
        writeln!(
            s,
            r#"<line class="wire" x1="{}" y1="{2}" x2="{}" y2="{2}"/>"#,
            px(w.x0),
            px(w.x1),
            py(w.y)
        )
        .unwrap();
        let sym = if c > 0 { '+' } else { '-' };
        writeln!(
            s,
            r#"<text class="charge" x="{}" y="{}" font-size="14" fill="black" stroke="none">{}</text>"#,
            px(w.x0) - 18,
            py(w.y) + 5,
            sym
        )
        .unwrap();
    }
    svg_close(&mut s);
    s
}

pub fn braid_svg(word: &BraidWord, plan: Option<&PlatPlan>) -> String {
    let n = word.strands() as i64;
    let len = word.letters().len() as i64;
    let cap = if plan.is_some() { BRAID_SY } else { 0 };
    let body = len.max(1);
    let width = 2 * BRAID_MARGIN + (n - 1) * BRAID_SX;
    let height = 2 * BRAID_MARGIN + body * BRAID_SY + 2 * cap;
    let px = |i: i64| BRAID_MARGIN + (i - 1) * BRAID_SX;
    let bottom = height - BRAID_MARGIN - cap;
    let py = |t: i64| bottom - t * BRAID_SY;

    let mut s = String::new();
    svg_open(&mut s, width, height);
    if word.letters().is_empty() {
        for i in 1..=n {
            writeln!(
                s,
                r#"<line class="strand" x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                px(i),
                py(0),
                py(body)
            )
            .unwrap();
        }
    }
    for (t, &letter) in word.letters().iter().enumerate() {
        let t = t as i64;
        let g = i64::from(letter.unsigned_abs());
        let (y0, y1) = (py(t), py(t + 1));
        for i in 1..=n {
            if i != g && i != g + 1 {
                writeln!(
                    s,
                    r#"<line class="strand" x1="{0}" y1="{y0}" x2="{0}" y2="{y1}"/>"#,
                    px(i)
                )
                .unwrap();
            }
        }
        let (xa, xb) = (px(g), px(g + 1));
        let (over, under) = if letter > 0 { ((xa, xb), (xb, xa)) } else { ((xb, xa), (xa, xb)) };
        let lerp = |a: i64, b: i64, pct: i64| a + (b - a) * pct / 100;
        writeln!(s, r#"<g class="crossing">"#).unwrap();
        writeln!(s, r#"<line x1="{}" y1="{y0}" x2="{}" y2="{y1}"/>"#, over.0, over.1).unwrap();
        writeln!(
            s,
            r#"<line x1="{}" y1="{y0}" x2="{}" y2="{}"/>"#,
            under.0,
            lerp(under.0, under.1, 38),
            lerp(y0, y1, 38)
        )
        .unwrap();
        writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{y1}"/>"#,
            lerp(under.0, under.1, 62),
            lerp(y0, y1, 62),
            under.1
        )
        .unwrap();
        writeln!(s, "</g>").unwrap();
    }
    if let Some(plan) = plan {
        for &(a, b) in plan.bottom.pairs() {
            arc(&mut s, "cup", px(a as i64), px(b as i64), py(0), 1);
        }
        for &(a, b) in plan.top.pairs() {
            arc(&mut s, "cap", px(a as i64), px(b as i64), py(len.max(1)), -1);
        }
    }
    svg_close(&mut s);
    s
}

fn arc(s: &mut String, class: &str, xa: i64, xb: i64, y: i64, dir: i64) {
    let depth = 10 + (xb - xa - BRAID_SX) / 8;
    writeln!(
        s,
        r#"<path class="{class}" d="M {xa} {y} Q {} {} {xb} {y}"/>"#,
        (xa + xb) / 2,
        y + dir * depth
    )
    .unwrap();
}
