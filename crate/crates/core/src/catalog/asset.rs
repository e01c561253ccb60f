use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::Rect;

/// A vector image ready for inlining: its view box and the markup found
/// inside the root `<svg>` element.
#[derive(Debug, Clone, PartialEq)]
pub struct Asset {
    pub view_box: Rect,
    pub body: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssetError {
    #[error("no <svg> root element")]
    NoRoot,
    #[error("unterminated <svg> start tag")]
    Unterminated,
    #[error("missing </svg> end tag")]
    NoEndTag,
    #[error("no usable viewBox or width/height")]
    NoSize,
    #[error("malformed number {0:?}")]
    BadNumber(String),
}

impl Asset {
    pub fn new(view_box: Rect, body: impl Into<String>) -> Self {
        Asset {
            view_box,
            body: body.into(),
        }
    }

    /// Reads an SVG document. The natural size is the `viewBox`, falling back
    /// to `width`/`height` at the origin.
    pub fn from_svg(text: &str) -> Result<Asset, AssetError> {
        let start = find_root(text).ok_or(AssetError::NoRoot)?;
        let tag_end = tag_end(text, start).ok_or(AssetError::Unterminated)?;
        let tag = &text[start + 4..tag_end];
        let self_closing = tag.trim_end().ends_with('/');
        let attrs = attributes(tag.trim_end().trim_end_matches('/'));

        let attr = |name: &str| attrs.iter().find(|(n, _)| *n == name).map(|(_, v)| *v);
        let view_box = if let Some(vb) = attr("viewBox") {
            let nums = vb
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(number)
                .collect::<Result<Vec<_>, _>>()?;
            match nums[..] {
                [x, y, w, h] => Rect::new(x, y, w, h),
                _ => return Err(AssetError::NoSize),
            }
        } else {
            match (attr("width"), attr("height")) {
                (Some(w), Some(h)) => Rect::from_size(length(w)?, length(h)?),
                _ => return Err(AssetError::NoSize),
            }
        };
        if !(view_box.width >= 0.0 && view_box.height >= 0.0) {
            return Err(AssetError::NoSize);
        }

        let body = if self_closing {
            String::new()
        } else {
            let inner_start = tag_end + 1;
            let inner_end = text.rfind("</svg>").filter(|&e| e >= inner_start).ok_or(AssetError::NoEndTag)?;
            normalize_body(&text[inner_start..inner_end])
        };
        Ok(Asset { view_box, body })
    }
}

fn find_root(text: &str) -> Option<usize> {
    let mut from = 0;
    while let Some(i) = text[from..].find("<svg") {
        let at = from + i;
        match text[at + 4..].chars().next() {
            Some(c) if c.is_whitespace() || c == '>' || c == '/' => return Some(at),
            _ => from = at + 4,
        }
    }
    None
}

fn tag_end(text: &str, start: usize) -> Option<usize> {
    let mut quote = None;
    for (i, c) in text[start..].char_indices() {
        match (quote, c) {
            (None, '"' | '\'') => quote = Some(c),
            (Some(q), c) if c == q => quote = None,
            (None, '>') => return Some(start + i),
            _ => {}
        }
    }
    None
}

fn attributes(tag: &str) -> Vec<(&str, &str)> {
    let mut out = Vec::new();
    let mut rest = tag;
    while let Some(eq) = rest.find('=') {
        let name = rest[..eq].trim();
        let after = rest[eq + 1..].trim_start();
        let Some(q) = after.chars().next().filter(|c| *c == '"' || *c == '\'') else {
            break;
        };
        let Some(close) = after[1..].find(q) else {
            break;
        };
        out.push((name.rsplit(char::is_whitespace).next().unwrap_or(name), &after[1..1 + close]));
        rest = &after[close + 2..];
    }
    out
}

fn number(s: &str) -> Result<f64, AssetError> {
    s.trim().parse().map_err(|_| AssetError::BadNumber(s.into()))
}

fn length(s: &str) -> Result<f64, AssetError> {
    number(s.trim().trim_end_matches("px"))
}

fn normalize_body(body: &str) -> String {
    let mut out = String::new();
    for line in body.lines() {
        let line = line.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        out.push_str(line);
        out.push('\n');
    }
    out
}
