//! The component-preserving bijection from class A (Grand Schröder paths
//! with every flat on `y = 2`) to class B (Schröder paths with at most one
//! peak per component), and its inverse.
//!
//! Both directions work one component at a time. Below-ground components of
//! a class-A path are reflected and have all their peaks flattened, giving a
//! peakless Schröder component. Above-ground components go through a
//! seven-stage cut-and-paste pipeline (see [`map_indecomposable_above`]) that
//! ends with exactly one peak. Every stage has an explicit inverse here, and
//! the inverse stages check their own domains so that a failure surfaces as
//! [`BijectionError::InverseDomainError`] instead of a wrong answer.
//!
//! Vertex indices (marks, landmarks, apexes) always refer to the path of the
//! stage they are attached to.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::path::{
    components, in_class_a, in_class_b, peak_apexes, reflect, MarkedPath, Path, PathClass, Step,
};

/// Height of the line that carries every flat of a class-A path.
pub const FLAT_LINE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("vertex {0} is not a peak apex")]
    UnknownApex(usize),
    #[error("flat step leaving vertex {vertex} is at height {height}, expected 1")]
    FlatNotAtHeightOne { vertex: usize, height: i32 },
    #[error("mark {0} is not a ground-level valley between a down step and an up step")]
    MarkNotContractible(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("inverse stage domain check failed: {0}")]
    InverseDomainError(String),
    #[error("path {path:?} is not in class {class}")]
    NotInClass { path: String, class: PathClass },
}

type Result<T> = std::result::Result<T, BijectionError>;

fn precondition(msg: impl Into<String>) -> BijectionError {
    BijectionError::PreconditionViolated(msg.into())
}

fn inverse_domain(msg: impl Into<String>) -> BijectionError {
    BijectionError::InverseDomainError(msg.into())
}

fn is_dyck(p: &Path) -> bool {
    !p.has_flats() && p.heights().iter().all(|h| *h >= 0) && p.end_height() == 0
}

fn is_grand_dyck(p: &Path) -> bool {
    !p.has_flats() && p.end_height() == 0
}

/// Replace every peak `UD` whose apex is not in `keep` by a single flat.
pub fn flatten_peaks(p: &Path, keep: &BTreeSet<usize>) -> Result<Path> {
    let apexes = peak_apexes(p);
    if let Some(&bad) = keep.iter().find(|k| apexes.binary_search(k).is_err()) {
        return Err(BijectionError::UnknownApex(bad));
    }
    let steps = p.steps();
    let mut out = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        if steps[i] == Step::Up && steps.get(i + 1) == Some(&Step::Down) && !keep.contains(&(i + 1))
        {
            out.push(Step::Flat);
            i += 2;
        } else {
            out.push(steps[i]);
            i += 1;
        }
    }
    Ok(Path::new(out))
}

/// Replace every flat by `UD` at the same base height.
pub fn unflatten_flats(p: &Path) -> Path {
    unflatten_flats_tracking(p, 0).0
}

/// [`unflatten_flats`], also returning where `vertex` of `p` lands in the
/// result. Each flat to the left of the vertex adds one vertex.
pub fn unflatten_flats_tracking(p: &Path, vertex: usize) -> (Path, usize) {
    let mut out = Vec::with_capacity(p.len() + p.count(Step::Flat));
    let mut moved = vertex;
    for (i, step) in p.steps().iter().enumerate() {
        if *step == Step::Flat {
            out.push(Step::Up);
            out.push(Step::Down);
            if i < vertex {
                moved += 1;
            }
        } else {
            out.push(*step);
        }
    }
    (Path::new(out), moved)
}

fn is_below_component(p: &Path) -> bool {
    p.is_indecomposable() && p.steps()[0] == Step::Down
}

fn is_above_component(p: &Path) -> bool {
    p.is_indecomposable() && p.steps()[0] == Step::Up
}

/// Reflect a below-ground component and flatten every peak.
pub fn map_indecomposable_below(p: &Path) -> Result<Path> {
    if !is_below_component(p) || p.has_flats() {
        return Err(precondition(format!(
            "{p:?} is not a flat-free indecomposable path below ground"
        )));
    }
    flatten_peaks(&reflect(p), &BTreeSet::new())
}

/// Replace each flat (all at height 1) of a Schröder path by `DU`, marking
/// the new ground-level vertex between the two steps.
pub fn expand_flats(p: &Path) -> Result<MarkedPath> {
    if p.end_height() != 0 || p.heights().iter().any(|h| *h < 0) {
        return Err(precondition(format!("{p} is not a Schröder path")));
    }
    let mut out = Vec::with_capacity(p.len() + p.count(Step::Flat));
    let mut marks = BTreeSet::new();
    let mut h = 0;
    for (vertex, step) in p.steps().iter().enumerate() {
        match step {
            Step::Flat if h != 1 => {
                return Err(BijectionError::FlatNotAtHeightOne { vertex, height: h });
            }
            Step::Flat => {
                out.push(Step::Down);
                marks.insert(out.len());
                out.push(Step::Up);
            }
            _ => out.push(*step),
        }
        h += step.rise();
    }
    MarkedPath::new(Path::new(out), marks).map_err(|e| precondition(e.to_string()))
}

/// Inverse of [`expand_flats`]: each marked `DU` valley becomes a flat.
pub fn contract_marks(mp: &MarkedPath) -> Result<Path> {
    let steps = mp.path().steps();
    let heights = mp.path().heights();
    for &m in mp.marks() {
        let ok = m > 0
            && m < steps.len()
            && steps[m - 1] == Step::Down
            && steps[m] == Step::Up
            && heights[m] == 0;
        if !ok {
            return Err(BijectionError::MarkNotContractible(m));
        }
    }
    let mut out = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        if mp.marks().contains(&(i + 1)) {
            out.push(Step::Flat);
            i += 2;
        } else {
            out.push(steps[i]);
            i += 1;
        }
    }
    Ok(Path::new(out))
}

/// Reflect the first component and every component starting at a mark.
pub fn flip_marked(mp: &MarkedPath) -> Result<Path> {
    let path = mp.path();
    if path.is_empty() || !is_dyck(path) {
        return Err(precondition(format!("{path} is not a nonempty Dyck path")));
    }
    let view = components(path).map_err(|e| precondition(e.to_string()))?;
    let starts: BTreeSet<usize> = view.iter().map(|c| c.start).collect();
    if let Some(m) = mp.marks().iter().find(|m| !starts.contains(m)) {
        return Err(precondition(format!(
            "mark {m} is not a component boundary"
        )));
    }
    let flipped: Vec<Path> = view
        .iter()
        .map(|c| {
            if c.start == 0 || mp.marks().contains(&c.start) {
                reflect(&c.path)
            } else {
                c.path.clone()
            }
        })
        .collect();
    Ok(Path::concat(&flipped))
}

/// Inverse of [`flip_marked`]: reflect every below-ground component and mark
/// the start of each one after the first.
pub fn recover_marks(g: &Path) -> Result<MarkedPath> {
    if g.is_empty() || !is_grand_dyck(g) {
        return Err(inverse_domain(format!(
            "{g} is not a nonempty Grand Dyck path"
        )));
    }
    let view = components(g).map_err(|e| inverse_domain(e.to_string()))?;
    if !view.components[0].is_below() {
        return Err(inverse_domain(format!(
            "first component of {g} is not below ground"
        )));
    }
    let mut marks = BTreeSet::new();
    let mut parts = Vec::with_capacity(view.len());
    for c in view.iter() {
        if c.is_below() {
            if c.start > 0 {
                marks.insert(c.start);
            }
            parts.push(reflect(&c.path));
        } else {
            parts.push(c.path.clone());
        }
    }
    MarkedPath::new(Path::concat(&parts), marks).map_err(|e| inverse_domain(e.to_string()))
}

/// The two cut points of the interchange stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Landmarks {
    /// Leftmost vertex of minimum height.
    pub v1: usize,
    /// End of the last up step that returns to ground level.
    pub v2: usize,
}

pub fn landmarks(g: &Path) -> Result<Landmarks> {
    if g.is_empty() || !is_grand_dyck(g) || g.steps()[0] != Step::Down {
        return Err(precondition(format!(
            "{g} is not a nonempty Grand Dyck path starting below ground"
        )));
    }
    let heights = g.heights();
    let min = *heights.iter().min().unwrap();
    let v1 = heights.iter().position(|h| *h == min).unwrap();
    let v2 = (1..heights.len())
        .rev()
        .find(|&v| heights[v] == 0 && g.steps()[v - 1] == Step::Up)
        .ok_or_else(|| precondition(format!("{g} has no up step ending at ground level")))?;
    debug_assert!(0 < v1 && v1 < v2);
    Ok(Landmarks { v1, v2 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interchanged {
    pub path: Path,
    /// Image of `v2`: the apex that survives the next flattening stage.
    pub w: usize,
}

/// Swap the segments `0..v1` and `v1..v2` of `g`.
pub fn interchange(g: &Path, v1: usize, v2: usize) -> Result<Interchanged> {
    let marks = landmarks(g)?;
    if marks != (Landmarks { v1, v2 }) {
        return Err(precondition(format!(
            "({v1}, {v2}) are not the landmarks ({}, {}) of {g}",
            marks.v1, marks.v2
        )));
    }
    let steps = g.steps();
    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[v1..v2]);
    out.extend_from_slice(&steps[..v1]);
    out.extend_from_slice(&steps[v2..]);
    let path = Path::new(out);
    let w = v2 - v1;
    debug_assert!(is_dyck(&path));
    debug_assert!(peak_apexes(&path).contains(&w));
    Ok(Interchanged { path, w })
}

/// Inverse of [`interchange`]. `z` is the first return to ground after `w`;
/// the result is `d[w..z] ++ d[0..w] ++ d[z..]`.
pub fn reverse_interchange(d: &Path, w: usize) -> Result<Path> {
    if !is_dyck(d) {
        return Err(inverse_domain(format!("{d} is not a Dyck path")));
    }
    let steps = d.steps();
    if w == 0 || w >= steps.len() || steps[w - 1] != Step::Up || steps[w] != Step::Down {
        return Err(inverse_domain(format!("{w} is not a peak apex of {d}")));
    }
    let heights = d.heights();
    let z = (w + 1..heights.len())
        .find(|&v| heights[v] == 0)
        .ok_or_else(|| inverse_domain(format!("{d} does not return to ground after {w}")))?;
    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[w..z]);
    out.extend_from_slice(&steps[..w]);
    out.extend_from_slice(&steps[z..]);
    Ok(Path::new(out))
}

/// Optional vertex labels attached to a traced stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageLandmarks {
    pub v1: Option<usize>,
    pub v2: Option<usize>,
    pub w: Option<usize>,
}

impl fmt::Display for StageLandmarks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: Vec<String> = [("v1", self.v1), ("v2", self.v2), ("w", self.w)]
            .iter()
            .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
            .collect();
        write!(f, "[{}]", fields.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StageValue {
    Path(Path),
    Marked(MarkedPath),
}

impl StageValue {
    pub fn path(&self) -> &Path {
        match self {
            StageValue::Path(p) => p,
            StageValue::Marked(mp) => mp.path(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub label: &'static str,
    pub value: StageValue,
    pub landmarks: Option<StageLandmarks>,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label)?;
        match &self.value {
            StageValue::Path(p) => write!(f, "{p}")?,
            StageValue::Marked(mp) => write!(f, "{mp}")?,
        }
        if let Some(marks) = &self.landmarks {
            write!(f, " {marks}")?;
        }
        Ok(())
    }
}

/// Labeled intermediate values of a single-component map, input first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StageTrace {
    pub stages: Vec<Stage>,
}

impl StageTrace {
    pub fn output(&self) -> Option<&Path> {
        self.stages.last().map(|s| s.value.path())
    }
}

impl fmt::Display for StageTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stage in &self.stages {
            writeln!(f, "{}", stage.to_string().trim_end())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Collects stages only when tracing is requested.
struct Recorder(Option<Vec<Stage>>);

impl Recorder {
    fn off() -> Self {
        Recorder(None)
    }

    fn on() -> Self {
        Recorder(Some(Vec::new()))
    }

    fn path(&mut self, label: &'static str, p: &Path) {
        self.push(label, || StageValue::Path(p.clone()), None);
    }

    fn push(
        &mut self,
        label: &'static str,
        value: impl FnOnce() -> StageValue,
        landmarks: Option<StageLandmarks>,
    ) {
        if let Some(stages) = &mut self.0 {
            stages.push(Stage {
                label,
                value: value(),
                landmarks,
            });
        }
    }

    fn finish(self) -> StageTrace {
        StageTrace {
            stages: self.0.unwrap_or_default(),
        }
    }
}

fn degenerate(p: &Path) -> Option<Path> {
    match p.steps() {
        [Step::Down, Step::Up] => Some(Path::new(vec![Step::Flat])),
        [Step::Up, Step::Down] => Some(p.clone()),
        _ => None,
    }
}

fn unmap_degenerate(q: &Path) -> Option<Path> {
    match q.steps() {
        [Step::Flat] => Some(Path::new(vec![Step::Down, Step::Up])),
        [Step::Up, Step::Down] => Some(q.clone()),
        _ => None,
    }
}

fn below_forward(p: &Path, rec: &mut Recorder) -> Result<Path> {
    rec.path("input", p);
    if let Some(q) = degenerate(p) {
        rec.path("size-one component", &q);
        return Ok(q);
    }
    if !is_below_component(p) || p.has_flats() {
        return Err(precondition(format!(
            "{p:?} is not a flat-free indecomposable path below ground"
        )));
    }
    let flipped = reflect(p);
    rec.path("reflect", &flipped);
    let flat = flatten_peaks(&flipped, &BTreeSet::new())?;
    rec.path("flatten all peaks", &flat);
    Ok(flat)
}

fn above_forward(p: &Path, rec: &mut Recorder) -> Result<Path> {
    if !is_above_component(p) || !in_class_a(p, FLAT_LINE) {
        return Err(precondition(format!(
            "{p:?} is not an indecomposable class-A path above ground"
        )));
    }
    rec.path("input", p);
    let inner = p.slice(1..p.len() - 1);
    rec.path("delete first and last steps", &inner);

    if inner.is_empty() {
        let empty = Path::empty();
        rec.push(
            "expand flats to DU",
            || StageValue::Marked(MarkedPath::unmarked(Path::empty())),
            None,
        );
        rec.path("flip first and marked components", &empty);
        rec.path("interchange segments", &empty);
        rec.path("flatten peaks except w", &empty);
        rec.path("prepend U, append D", p);
        return Ok(p.clone());
    }

    let expanded = expand_flats(&inner)?;
    rec.push(
        "expand flats to DU",
        || StageValue::Marked(expanded.clone()),
        None,
    );
    let flipped = flip_marked(&expanded)?;
    let Landmarks { v1, v2 } = landmarks(&flipped)?;
    rec.push(
        "flip first and marked components",
        || StageValue::Path(flipped.clone()),
        Some(StageLandmarks {
            v1: Some(v1),
            v2: Some(v2),
            w: None,
        }),
    );
    let Interchanged { path: swapped, w } = interchange(&flipped, v1, v2)?;
    rec.push(
        "interchange segments",
        || StageValue::Path(swapped.clone()),
        Some(StageLandmarks {
            w: Some(w),
            ..Default::default()
        }),
    );
    let flat = flatten_peaks(&swapped, &BTreeSet::from([w]))?;
    rec.path("flatten peaks except w", &flat);
    let out = flat.lifted();
    rec.path("prepend U, append D", &out);
    Ok(out)
}

/// Image of an above-ground indecomposable class-A component.
///
/// Stages:
/// 1. delete the first and last steps;
/// 2. [`expand_flats`], marking the new ground vertices;
/// 3. [`flip_marked`];
/// 4. [`landmarks`] and [`interchange`], which yields the apex `w`;
/// 5. [`flatten_peaks`] keeping only `w`;
/// 6. prepend `U` and append `D`.
///
/// The result is an indecomposable Schröder path of the same size with
/// exactly one peak. For `UD` the inner path is empty and the result is `UD`.
pub fn map_indecomposable_above(p: &Path) -> Result<Path> {
    above_forward(p, &mut Recorder::off())
}

/// Image of one indecomposable class-A component, dispatching on its side.
pub fn map_indecomposable(p: &Path) -> Result<Path> {
    map_component(p, &mut Recorder::off())
}

fn map_component(p: &Path, rec: &mut Recorder) -> Result<Path> {
    match p.steps().first() {
        Some(Step::Down) => below_forward(p, rec),
        Some(Step::Up) => above_forward(p, rec),
        _ => Err(precondition(format!(
            "{p:?} is not an indecomposable class-A path"
        ))),
    }
}

fn unmap_component(q: &Path, rec: &mut Recorder) -> Result<Path> {
    if !q.is_indecomposable() || !in_class_b(q) {
        return Err(precondition(format!(
            "{q:?} is not an indecomposable class-B path"
        )));
    }
    rec.path("input", q);
    let apexes = peak_apexes(q);
    match apexes.as_slice() {
        [] => {
            if let Some(p) = unmap_degenerate(q) {
                rec.path("size-one component", &p);
                return Ok(p);
            }
            let dyck = unflatten_flats(q);
            rec.path("unflatten flats", &dyck);
            let out = reflect(&dyck);
            rec.path("reflect", &out);
            Ok(out)
        }
        [apex] => {
            let inner = q.slice(1..q.len() - 1);
            rec.path("strip first and last steps", &inner);
            if inner.is_empty() {
                let empty = Path::empty();
                rec.path("unflatten flats", &empty);
                rec.path("reverse interchange", &empty);
                rec.push(
                    "recover marks",
                    || StageValue::Marked(MarkedPath::unmarked(Path::empty())),
                    None,
                );
                rec.path("contract marks", &empty);
                rec.path("prepend U, append D", q);
                return Ok(q.clone());
            }
            let (dyck, w) = unflatten_flats_tracking(&inner, apex - 1);
            rec.push(
                "unflatten flats",
                || StageValue::Path(dyck.clone()),
                Some(StageLandmarks {
                    w: Some(w),
                    ..Default::default()
                }),
            );
            let grand = reverse_interchange(&dyck, w)?;
            rec.path("reverse interchange", &grand);
            let marked = recover_marks(&grand)?;
            rec.push("recover marks", || StageValue::Marked(marked.clone()), None);
            let contracted = contract_marks(&marked).map_err(|e| inverse_domain(e.to_string()))?;
            rec.path("contract marks", &contracted);
            let out = contracted.lifted();
            rec.path("prepend U, append D", &out);
            Ok(out)
        }
        _ => Err(precondition(format!("{q} has more than one peak"))),
    }
}

/// Preimage of one indecomposable class-B component.
///
/// A peakless component is unflattened and reflected below ground. A
/// one-peak component runs the above-ground pipeline backwards, locating
/// `w` by tracking the surviving apex through the unflattening.
pub fn unmap_indecomposable(q: &Path) -> Result<Path> {
    unmap_component(q, &mut Recorder::off())
}

/// Map a class-A path to class B, component by component.
pub fn phi(p: &Path) -> Result<Path> {
    if !in_class_a(p, FLAT_LINE) {
        return Err(BijectionError::NotInClass {
            path: p.to_string(),
            class: PathClass::A,
        });
    }
    let view = components(p).map_err(|e| precondition(e.to_string()))?;
    let images = view
        .iter()
        .map(|c| map_indecomposable(&c.path))
        .collect::<Result<Vec<_>>>()?;
    Ok(Path::concat(&images))
}

/// Map a class-B path back to class A, component by component.
pub fn phi_inverse(q: &Path) -> Result<Path> {
    if !in_class_b(q) {
        return Err(BijectionError::NotInClass {
            path: q.to_string(),
            class: PathClass::B,
        });
    }
    let view = components(q).map_err(|e| precondition(e.to_string()))?;
    let preimages = view
        .iter()
        .map(|c| unmap_indecomposable(&c.path))
        .collect::<Result<Vec<_>>>()?;
    Ok(Path::concat(&preimages))
}

/// Stage-by-stage record of the map (or its inverse) on one component.
pub fn trace_stages(p: &Path, direction: Direction) -> Result<StageTrace> {
    let (class, ok) = match direction {
        Direction::Forward => (PathClass::A, in_class_a(p, FLAT_LINE)),
        Direction::Inverse => (PathClass::B, in_class_b(p)),
    };
    if !ok || !p.is_indecomposable() {
        return Err(BijectionError::NotInClass {
            path: p.to_string(),
            class,
        });
    }
    let mut rec = Recorder::on();
    match direction {
        Direction::Forward => map_component(p, &mut rec)?,
        Direction::Inverse => unmap_component(p, &mut rec)?,
    };
    Ok(rec.finish())
}
