//! Lattice paths over the step alphabet `U`, `F`, `D`.
//!
//! A [`Path`] is a finite sequence of steps starting at height 0. Up steps
//! rise by one, down steps fall by one and flat steps keep the height while
//! spanning two horizontal half-units. Vertices are indexed from 0 over the
//! height profile, so a path with `k` steps has `k + 1` vertices and step `i`
//! joins vertex `i` to vertex `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by path parsing and structural queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { position: usize, found: char },
    #[error("path ends at height {end_height}, not on ground level")]
    NotGroundTerminated { end_height: i32 },
    #[error("vertex {index} cannot carry a mark")]
    InvalidMark { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Flat,
    Up,
}

impl Step {
    /// Height change contributed by the step.
    pub fn rise(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        }
    }

    /// Horizontal extent in half-units.
    pub fn width(self) -> usize {
        match self {
            Step::Flat => 2,
            Step::Up | Step::Down => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Flat => 'F',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'F' => Some(Step::Flat),
            'D' => Some(Step::Down),
            _ => None,
        }
    }

    /// Mirror image across the horizontal axis.
    pub fn reflected(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            Step::Flat => Step::Flat,
        }
    }
}

/// A finite step sequence anchored at height 0.
///
/// Equality and ordering are those of the step sequence. Since the step
/// order is `Down < Flat < Up`, ordering coincides with the ASCII order of
/// the textual form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Self {
        Path { steps }
    }

    pub fn empty() -> Self {
        Path::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of vertices, one more than the number of steps.
    pub fn vertex_count(&self) -> usize {
        self.steps.len() + 1
    }

    /// Height profile; `heights()[0] == 0` and it has `len() + 1` entries.
    pub fn heights(&self) -> Vec<i32> {
        let mut heights = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        heights.push(h);
        for step in &self.steps {
            h += step.rise();
            heights.push(h);
        }
        heights
    }

    /// Number of up steps plus number of flat steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s != Step::Down).count()
    }

    pub fn end_height(&self) -> i32 {
        self.steps.iter().map(|s| s.rise()).sum()
    }

    pub fn count(&self, kind: Step) -> usize {
        self.steps.iter().filter(|s| **s == kind).count()
    }

    pub fn has_flats(&self) -> bool {
        self.steps.contains(&Step::Flat)
    }

    /// Steps `range` as a new path (re-anchored at height 0).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Path {
        Path::new(self.steps[range].to_vec())
    }

    pub fn concat<'a, I>(parts: I) -> Path
    where
        I: IntoIterator<Item = &'a Path>,
    {
        let mut steps = Vec::new();
        for part in parts {
            steps.extend_from_slice(&part.steps);
        }
        Path::new(steps)
    }

    /// A single path made of `U`, `self`, `D`.
    pub fn lifted(&self) -> Path {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        Path::new(steps)
    }

    /// True when the path ends on ground level and has exactly one component.
    pub fn is_indecomposable(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let heights = self.heights();
        heights[heights.len() - 1] == 0 && heights[1..heights.len() - 1].iter().all(|h| *h != 0)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Self {
        Path::new(steps)
    }
}

/// Parse an uppercase `U`/`F`/`D` string. The empty string is the empty path.
pub fn parse_path(text: &str) -> Result<Path, PathError> {
    text.chars()
        .enumerate()
        .map(|(position, c)| {
            Step::from_char(c).ok_or(PathError::InvalidCharacter { position, found: c })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Path::new)
}

pub fn format_path(p: &Path) -> String {
    p.to_string()
}

/// Summary of the geometric properties of a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_grand_schroeder: bool,
    pub is_nonnegative: bool,
    pub is_schroeder: bool,
    /// Height of each flat step, in path order.
    pub flat_heights: Vec<i32>,
    pub min_height: i32,
    pub max_height: i32,
}

pub fn classify(p: &Path) -> Classification {
    let heights = p.heights();
    let min_height = *heights.iter().min().unwrap_or(&0);
    let max_height = *heights.iter().max().unwrap_or(&0);
    let flat_heights = p
        .steps()
        .iter()
        .zip(&heights)
        .filter(|(s, _)| **s == Step::Flat)
        .map(|(_, h)| *h)
        .collect();
    let is_grand_schroeder = heights[heights.len() - 1] == 0;
    let is_nonnegative = min_height >= 0;
    Classification {
        is_grand_schroeder,
        is_nonnegative,
        is_schroeder: is_grand_schroeder && is_nonnegative,
        flat_heights,
        min_height,
        max_height,
    }
}

/// Ground-terminated path whose flat steps all lie on `flat_line`.
pub fn in_class_a(p: &Path, flat_line: i32) -> bool {
    let mut h = 0;
    for step in p.steps() {
        if *step == Step::Flat && h != flat_line {
            return false;
        }
        h += step.rise();
    }
    h == 0
}

/// Schröder path with at most one peak in each component.
pub fn in_class_b(p: &Path) -> bool {
    let mut h = 0;
    let mut peaks_in_component = 0;
    let mut prev = None;
    for step in p.steps() {
        if prev == Some(Step::Up) && *step == Step::Down {
            peaks_in_component += 1;
            if peaks_in_component > 1 {
                return false;
            }
        }
        h += step.rise();
        if h < 0 {
            return false;
        }
        if h == 0 {
            peaks_in_component = 0;
        }
        prev = Some(*step);
    }
    h == 0
}

/// The two path families related by the bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    /// Grand Schröder paths whose flats all lie on `y = 2`.
    A,
    /// Schröder paths with at most one peak per component.
    B,
}

impl PathClass {
    pub fn contains(self, p: &Path) -> bool {
        match self {
            PathClass::A => in_class_a(p, 2),
            PathClass::B => in_class_b(p),
        }
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathClass::A => "A",
            PathClass::B => "B",
        })
    }
}

/// One indecomposable factor of a ground-terminated path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertex index in the parent path where the component begins.
    pub start: usize,
    pub path: Path,
}

impl Component {
    /// Vertex index in the parent path where the component ends.
    pub fn end(&self) -> usize {
        self.start + self.path.len()
    }

    /// True when the component dips below ground level.
    pub fn is_below(&self) -> bool {
        self.path.steps().first() == Some(&Step::Down)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentView {
    pub components: Vec<Component>,
}

impl ComponentView {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Component> {
        self.components.iter()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.path.size()).collect()
    }

    /// Concatenation of the components, which is the original path.
    pub fn joined(&self) -> Path {
        Path::concat(self.components.iter().map(|c| &c.path))
    }
}

impl<'a> IntoIterator for &'a ComponentView {
    type Item = &'a Component;
    type IntoIter = std::slice::Iter<'a, Component>;

    fn into_iter(self) -> Self::IntoIter {
        self.components.iter()
    }
}

/// Split a ground-terminated path at each interior vertex on ground level.
pub fn components(p: &Path) -> Result<ComponentView, PathError> {
    let end_height = p.end_height();
    if end_height != 0 {
        return Err(PathError::NotGroundTerminated { end_height });
    }
    let mut view = ComponentView::default();
    let mut start = 0;
    let mut h = 0;
    for (i, step) in p.steps().iter().enumerate() {
        h += step.rise();
        if h == 0 {
            view.components.push(Component {
                start,
                path: p.slice(start..i + 1),
            });
            start = i + 1;
        }
    }
    Ok(view)
}

/// Vertices `v` with step `v - 1` up and step `v` down, increasing.
pub fn peak_apexes(p: &Path) -> Vec<usize> {
    p.steps()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn reflect(p: &Path) -> Path {
    Path::new(p.steps().iter().map(|s| s.reflected()).collect())
}

/// A path together with a set of marked ground-level interior vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MarkedPath {
    path: Path,
    marks: BTreeSet<usize>,
}

impl MarkedPath {
    /// Every mark must be an interior vertex at height 0.
    pub fn new(path: Path, marks: BTreeSet<usize>) -> Result<Self, PathError> {
        let heights = path.heights();
        for &m in &marks {
            if m == 0 || m + 1 >= heights.len() || heights[m] != 0 {
                return Err(PathError::InvalidMark { index: m });
            }
        }
        Ok(MarkedPath { path, marks })
    }

    pub fn unmarked(path: Path) -> Self {
        MarkedPath {
            path,
            marks: BTreeSet::new(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn into_parts(self) -> (Path, BTreeSet<usize>) {
        (self.path, self.marks)
    }
}

impl fmt::Display for MarkedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [marks=", self.path)?;
        for (i, m) in self.marks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}
