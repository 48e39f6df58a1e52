//! SVG diagrams of braid words.
//!
//! Strands run top to bottom, one band per letter, leftmost letter at the top.
//! In `σ_i` the strand moving from position `i` to `i + 1` passes over; in
//! `σ_i^{-1}` it passes under. The under-strand is broken by a white halo
//! drawn beneath the over-strand.

use std::fmt::Write;

use hilden_core::braid::BraidWord;

const GAP: usize = 40;
const BAND: usize = 48;
const MARGIN: usize = 20;
const STROKE: &str = "#222";

fn x(pos: usize) -> usize {
    MARGIN + (pos - 1) * GAP
}

fn segment(out: &mut String, x1: usize, y1: usize, x2: usize, y2: usize, extra: &str) {
    let mid = (y1 + y2) / 2;
    writeln!(
        out,
        r#"    <path d="M {x1} {y1} C {x1} {mid} {x2} {mid} {x2} {y2}"{extra}/>"#
    )
    .unwrap();
}

pub fn render_svg(word: &BraidWord) -> String {
    let m = word.strands();
    let bands = word.len().max(1);
    let width = 2 * MARGIN + (m - 1) * GAP;
    let height = 2 * MARGIN + bands * BAND;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{word}</title>").unwrap();
    writeln!(
        out,
        r#"  <g fill="none" stroke="{STROKE}" stroke-width="3" stroke-linecap="round">"#
    )
    .unwrap();
    if word.is_empty() {
        out.push_str("  <g class=\"strands\">\n");
        for p in 1..=m {
            writeln!(
                out,
                r#"    <line x1="{0}" y1="{MARGIN}" x2="{0}" y2="{1}"/>"#,
                x(p),
                height - MARGIN
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }
    for (k, letter) in word.letters().iter().enumerate() {
        let top = MARGIN + k * BAND;
        let bottom = top + BAND;
        let i = letter.index;
        writeln!(out, r#"  <g class="crossing" data-letter="{letter}">"#).unwrap();
        for p in (1..=m).filter(|&p| p != i && p != i + 1) {
            writeln!(
                out,
                r#"    <line x1="{0}" y1="{top}" x2="{0}" y2="{bottom}"/>"#,
                x(p)
            )
            .unwrap();
        }
        // (from, to) of the under and over strands
        let (under, over) = if letter.inverse {
            ((i, i + 1), (i + 1, i))
        } else {
            ((i + 1, i), (i, i + 1))
        };
        segment(&mut out, x(under.0), top, x(under.1), bottom, "");
        segment(
            &mut out,
            x(over.0),
            top,
            x(over.1),
            bottom,
            r##" stroke="#fff" stroke-width="11""##,
        );
        segment(&mut out, x(over.0), top, x(over.1), bottom, "");
        out.push_str("  </g>\n");
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_group_per_letter() {
        let w = BraidWord::from_signed(4, &[1, -3, 2]).unwrap();
        let svg = render_svg(&w);
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 3);
        assert_eq!(svg, render_svg(&w));
        assert!(svg.contains(r#"data-letter="s3'""#));
    }

    #[test]
    fn empty_word_is_straight_strands() {
        let svg = render_svg(&BraidWord::empty(5));
        assert_eq!(svg.matches("<line").count(), 5);
        assert!(!svg.contains("crossing"));
    }
}
