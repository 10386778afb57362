//! Labels (t-sets of colors), full and partial colorings, and their JSON form.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// A color. Palettes are always `1..=k`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex}: label has {found} colors, expected t = {expected}")]
    WrongSize {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex}: color {color} outside palette 1..={k}")]
    OutOfPalette { vertex: usize, color: Color, k: usize },
    #[error("vertex {vertex}: repeated color {color}")]
    RepeatedColor { vertex: usize, color: Color },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} has no label")]
    Unassigned(usize),
    #[error("tone t = {t} with palette k = {k}: need 1 <= t <= k")]
    BadParameters { t: usize, k: usize },
    #[error("coloring is for tone {found}, expected {expected}")]
    ToneMismatch { expected: usize, found: usize },
    #[error("malformed coloring JSON: {0}")]
    Json(String),
}

/// A nonempty set of colors, stored sorted and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Vec<Color>);

impl Label {
    /// Sorts `colors`; rejects zeros and repeats. `vertex` is only used to
    /// tag errors.
    pub fn new(mut colors: Vec<Color>, vertex: usize) -> Result<Self, ColoringError> {
        colors.sort_unstable();
        if let Some(w) = colors.windows(2).find(|w| w[0] == w[1]) {
            return Err(ColoringError::RepeatedColor {
                vertex,
                color: w[0],
            });
        }
        if colors.first() == Some(&0) {
            return Err(ColoringError::OutOfPalette {
                vertex,
                color: 0,
                k: 0,
            });
        }
        Ok(Label(colors))
    }

    /// Wraps colors that are already sorted, distinct and positive.
    pub(crate) fn from_sorted(colors: Vec<Color>) -> Self {
        debug_assert!(colors.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(colors.first() != Some(&0));
        Label(colors)
    }

    /// `{first, first + 1, ..., first + len - 1}`.
    pub fn range(first: Color, len: usize) -> Self {
        Label((first..first + len as Color).collect())
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn max_color(&self) -> Color {
        self.0.last().copied().unwrap_or(0)
    }

    /// `|self ∩ other|`.
    pub fn shared(&self, other: &Label) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "}}")
    }
}

/// A (possibly partial) t-tone coloring with palette `1..=k` on vertices
/// `0..n`. Every stored label has exactly `t` colors in range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    t: usize,
    k: usize,
    labels: Vec<Option<Label>>,
}

impl Coloring {
    /// An empty coloring of `n` vertices.
    pub fn new(t: usize, k: usize, n: usize) -> Result<Self, ColoringError> {
        if t == 0 || t > k {
            return Err(ColoringError::BadParameters { t, k });
        }
        Ok(Coloring {
            t,
            k,
            labels: vec![None; n],
        })
    }

    /// A total coloring from one label per vertex.
    pub fn from_labels(t: usize, k: usize, labels: Vec<Label>) -> Result<Self, ColoringError> {
        let mut c = Coloring::new(t, k, labels.len())?;
        for (v, l) in labels.into_iter().enumerate() {
            c.assign(v, l)?;
        }
        Ok(c)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, v: usize) -> Option<&Label> {
        self.labels.get(v).and_then(Option::as_ref)
    }

    pub fn labels(&self) -> &[Option<Label>] {
        &self.labels
    }

    pub fn check_label(&self, v: usize, label: &Label) -> Result<(), ColoringError> {
        if label.len() != self.t {
            return Err(ColoringError::WrongSize {
                vertex: v,
                expected: self.t,
                found: label.len(),
            });
        }
        if label.max_color() as usize > self.k {
            return Err(ColoringError::OutOfPalette {
                vertex: v,
                color: label.max_color(),
                k: self.k,
            });
        }
        Ok(())
    }

    pub fn assign(&mut self, v: usize, label: Label) -> Result<(), ColoringError> {
        if v >= self.n() {
            return Err(ColoringError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        self.check_label(v, &label)?;
        self.labels[v] = Some(label);
        Ok(())
    }

    pub fn unassign(&mut self, v: usize) -> Option<Label> {
        self.labels[v].take()
    }

    pub fn is_total(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Number of distinct colors appearing on some label.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<Color> = self.labels.iter().flatten().flat_map(|l| l.0.iter().copied()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Largest color on any label (0 if nothing is assigned).
    pub fn max_color(&self) -> Color {
        self.labels.iter().flatten().map(Label::max_color).max().unwrap_or(0)
    }

    /// Same labels, palette size changed. Fails if a label no longer fits.
    pub fn with_palette(&self, k: usize) -> Result<Self, ColoringError> {
        let mut c = Coloring::new(self.t, k, self.n())?;
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                c.assign(v, l.clone())?;
            }
        }
        Ok(c)
    }

    /// Re-indexes vertices: vertex `v` of the result carries the label of
    /// `self` at `source[v]`.
    pub fn pull_back(&self, n: usize, source: impl Fn(usize) -> Option<usize>) -> Self {
        let labels = (0..n)
            .map(|v| source(v).and_then(|s| self.get(s).cloned()))
            .collect();
        Coloring {
            t: self.t,
            k: self.k,
            labels,
        }
    }

    /// Compact JSON: `{"t":..,"k":..,"labels":{"0":[..],..}}`, keys in
    /// increasing vertex order, unassigned vertices omitted.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    /// Parses and validates the JSON form. The vertex count is one more than
    /// the largest key.
    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            t: usize,
            k: usize,
            labels: BTreeMap<String, Vec<Color>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| ColoringError::Json(e.to_string()))?;
        let mut entries = Vec::with_capacity(raw.labels.len());
        for (key, colors) in raw.labels {
            let v: usize = key
                .parse()
                .map_err(|_| ColoringError::Json(format!("vertex key {:?} is not a vertex id", key)))?;
            entries.push((v, colors));
        }
        let n = entries.iter().map(|(v, _)| v + 1).max().unwrap_or(0);
        let mut c = Coloring::new(raw.t, raw.k, n)?;
        for (v, colors) in entries {
            let label = Label::new(colors, v).map_err(|e| match e {
                ColoringError::OutOfPalette { vertex, color, .. } => ColoringError::OutOfPalette {
                    vertex,
                    color,
                    k: raw.k,
                },
                other => other,
            })?;
            c.assign(v, label)?;
        }
        Ok(c)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Labels<'a>(&'a [Option<Label>]);
        impl Serialize for Labels<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let count = self.0.iter().flatten().count();
                let mut map = serializer.serialize_map(Some(count))?;
                for (v, l) in self.0.iter().enumerate() {
                    if let Some(l) = l {
                        map.serialize_entry(&v.to_string(), l.colors())?;
                    }
                }
                map.end()
            }
        }
        let mut s = serializer.serialize_struct("Coloring", 3)?;
        s.serialize_field("t", &self.t)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("labels", &Labels(&self.labels))?;
        s.end()
    }
}
