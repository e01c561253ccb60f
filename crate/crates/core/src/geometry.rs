//! Planar geometry in layout units. The y axis points down.

use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Axis-aligned box: top-left corner plus non-negative size.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    pub const fn new(x: f64, y: f64, width: f64, height: f64) -> Self {
        Rect { x, y, width, height }
    }

    pub const fn from_size(width: f64, height: f64) -> Self {
        Rect::new(0.0, 0.0, width, height)
    }

    /// Smallest box containing all points. `None` for an empty iterator.
    pub fn bounding(points: impl IntoIterator<Item = Point>) -> Option<Rect> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let (mut x0, mut y0, mut x1, mut y1) = (first.x, first.y, first.x, first.y);
        for p in it {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        Some(Rect::new(x0, y0, x1 - x0, y1 - y0))
    }

    pub fn right(&self) -> f64 {
        self.x + self.width
    }

    pub fn bottom(&self) -> f64 {
        self.y + self.height
    }

    pub fn center(&self) -> Point {
        Point::new(self.x + self.width / 2.0, self.y + self.height / 2.0)
    }

    pub fn point(&self, p: RemarkablePoint) -> Point {
        remarkable_point(*self, p)
    }

    pub fn union(&self, other: &Rect) -> Rect {
        let x = self.x.min(other.x);
        let y = self.y.min(other.y);
        Rect::new(x, y, self.right().max(other.right()) - x, self.bottom().max(other.bottom()) - y)
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Rect {
        Rect::new(self.x + dx, self.y + dy, self.width, self.height)
    }

    pub fn is_degenerate(&self) -> bool {
        self.width <= 0.0 && self.height <= 0.0
    }

    /// `other` lies inside `self`, allowing `eps` of slack on every side.
    pub fn contains(&self, other: &Rect, eps: f64) -> bool {
        other.x >= self.x - eps
            && other.y >= self.y - eps
            && other.right() <= self.right() + eps
            && other.bottom() <= self.bottom() + eps
    }

    pub fn approx_eq(&self, other: &Rect, eps: f64) -> bool {
        (self.x - other.x).abs() <= eps
            && (self.y - other.y).abs() <= eps
            && (self.width - other.width).abs() <= eps
            && (self.height - other.height).abs() <= eps
    }
}

/// The nine distinguished points of a bounding box: corners, edge midpoints
/// and center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RemarkablePoint {
    NorthWest,
    North,
    NorthEast,
    West,
    Center,
    East,
    SouthWest,
    South,
    SouthEast,
}

impl RemarkablePoint {
    pub const ALL: [RemarkablePoint; 9] = [
        RemarkablePoint::NorthWest,
        RemarkablePoint::North,
        RemarkablePoint::NorthEast,
        RemarkablePoint::West,
        RemarkablePoint::Center,
        RemarkablePoint::East,
        RemarkablePoint::SouthWest,
        RemarkablePoint::South,
        RemarkablePoint::SouthEast,
    ];

    /// Fractions of width and height from the top-left corner.
    pub fn fractions(self) -> (f64, f64) {
        use RemarkablePoint::*;
        let fx = match self {
            NorthWest | West | SouthWest => 0.0,
            North | Center | South => 0.5,
            NorthEast | East | SouthEast => 1.0,
        };
        let fy = match self {
            NorthWest | North | NorthEast => 0.0,
            West | Center | East => 0.5,
            SouthWest | South | SouthEast => 1.0,
        };
        (fx, fy)
    }

    pub fn as_str(self) -> &'static str {
        use RemarkablePoint::*;
        match self {
            NorthWest => "NW",
            North => "N",
            NorthEast => "NE",
            West => "W",
            Center => "C",
            East => "E",
            SouthWest => "SW",
            South => "S",
            SouthEast => "SE",
        }
    }
}

impl fmt::Display for RemarkablePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown remarkable point {0:?}")]
pub struct UnknownPoint(pub alloc::string::String);

impl FromStr for RemarkablePoint {
    type Err = UnknownPoint;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RemarkablePoint::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| UnknownPoint(s.into()))
    }
}

pub fn remarkable_point(rect: Rect, p: RemarkablePoint) -> Point {
    let (fx, fy) = p.fractions();
    Point::new(rect.x + fx * rect.width, rect.y + fy * rect.height)
}

/// Uniform scale followed by a translation: `p ↦ scale·p + (dx, dy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub scale: f64,
    pub dx: f64,
    pub dy: f64,
}

impl Default for Transform {
    fn default() -> Self {
        Transform::IDENTITY
    }
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        scale: 1.0,
        dx: 0.0,
        dy: 0.0,
    };

    pub const fn new(scale: f64, dx: f64, dy: f64) -> Self {
        Transform { scale, dx, dy }
    }

    pub const fn translate(dx: f64, dy: f64) -> Self {
        Transform { scale: 1.0, dx, dy }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(self.scale * p.x + self.dx, self.scale * p.y + self.dy)
    }

    pub fn apply_rect(&self, r: &Rect) -> Rect {
        let origin = self.apply(Point::new(r.x, r.y));
        Rect::new(origin.x, origin.y, r.width * self.scale, r.height * self.scale)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Transform) -> Transform {
        Transform {
            scale: self.scale * inner.scale,
            dx: self.scale * inner.dx + self.dx,
            dy: self.scale * inner.dy + self.dy,
        }
    }
}

/// Outcome of fitting a content box into a frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fit {
    pub transform: Transform,
    /// The content had no usable extent and was centered at scale 1.
    pub degenerate: bool,
}

/// Largest uniform scaling of `content` that fits in `frame`, centered.
///
/// Dimensions where the content has no extent do not constrain the scale.
/// If no dimension constrains it the content is centered at scale 1.
pub fn contain_fit(content: &Rect, frame: &Rect) -> Fit {
    let mut scale = f64::INFINITY;
    if content.width > 0.0 {
        scale = scale.min(frame.width / content.width);
    }
    if content.height > 0.0 {
        scale = scale.min(frame.height / content.height);
    }
    let degenerate = !(scale.is_finite() && scale > 0.0);
    if degenerate {
        scale = 1.0;
    }
    let fc = frame.center();
    let cc = content.center();
    Fit {
        transform: Transform::new(scale, fc.x - scale * cc.x, fc.y - scale * cc.y),
        degenerate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remarkable_points() {
        assert_eq!(remarkable_point(Rect::from_size(1.0, 1.0), RemarkablePoint::Center), Point::new(0.5, 0.5));
        assert_eq!(remarkable_point(Rect::new(10.0, 20.0, 30.0, 40.0), RemarkablePoint::SouthEast), Point::new(40.0, 60.0));
        let r = Rect::new(-3.0, 7.5, 2.0, 9.0);
        assert_eq!(remarkable_point(r, RemarkablePoint::NorthWest), Point::new(-3.0, 7.5));
        assert_eq!(remarkable_point(r, RemarkablePoint::East), Point::new(-1.0, 12.0));
    }

    #[test]
    fn points_parse() {
        for p in RemarkablePoint::ALL {
            assert_eq!(p.as_str().parse::<RemarkablePoint>().unwrap(), p);
        }
        assert!("X".parse::<RemarkablePoint>().is_err());
    }

    #[test]
    fn transform_composition() {
        let a = Transform::new(2.0, 1.0, -1.0);
        let b = Transform::new(0.5, 10.0, 4.0);
        let p = Point::new(3.0, 5.0);
        assert_eq!(a.compose(&b).apply(p), a.apply(b.apply(p)));
    }

    #[test]
    fn fit_centers_and_preserves_aspect() {
        let fit = contain_fit(&Rect::from_size(200.0, 100.0), &Rect::new(0.0, 0.0, 100.0, 100.0));
        assert!(!fit.degenerate);
        assert_eq!(fit.transform.apply_rect(&Rect::from_size(200.0, 100.0)), Rect::new(0.0, 25.0, 100.0, 50.0));
    }

    #[test]
    fn fit_degenerate_content() {
        let line = Rect::from_size(100.0, 0.0);
        let fit = contain_fit(&line, &Rect::from_size(50.0, 50.0));
        assert!(!fit.degenerate);
        assert_eq!(fit.transform.scale, 0.5);
        let dot = Rect::new(3.0, 3.0, 0.0, 0.0);
        let fit = contain_fit(&dot, &Rect::from_size(50.0, 50.0));
        assert!(fit.degenerate);
        assert_eq!(fit.transform.apply(Point::new(3.0, 3.0)), Point::new(25.0, 25.0));
    }
}
