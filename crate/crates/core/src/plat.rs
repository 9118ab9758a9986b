//! Plat diagrams in standard form.
//!
//! A [`TwistMatrix`] of width `m` and odd height `n` lists the signed crossing
//! count of every twist region. Odd rows twist the even generators
//! `σ_2, σ_4, …, σ_{2m-2}`; even rows twist the odd generators
//! `σ_1, σ_3, …, σ_{2m-1}`. The stored entries use the knot-diagram sign
//! convention; [`TwistMatrix::to_braid_word`] is the only place the sign is
//! flipped into braid exponents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::error::{PlatError, Result};

/// How the top and bottom endpoints of the braid are capped off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureStyle {
    /// Top `{x1,x2},…`, bottom `{y1,y2},…`.
    Standard,
    /// Top `{x1,x2},…`, bottom `{y2,y3},…,{y2m,y1}`.
    Even,
    /// Top `{x2,x3},…,{x2m,x1}`, bottom `{y2,y3},…,{y2m,y1}`.
    DoublyEven,
}

impl ClosureStyle {
    pub const ALL: [ClosureStyle; 3] = [
        ClosureStyle::Standard,
        ClosureStyle::Even,
        ClosureStyle::DoublyEven,
    ];

    /// Partner of each top endpoint (0-based positions).
    pub fn top_pairing(self, strands: usize) -> Vec<usize> {
        match self {
            ClosureStyle::Standard | ClosureStyle::Even => adjacent_pairing(strands),
            ClosureStyle::DoublyEven => shifted_pairing(strands),
        }
    }

    /// Partner of each bottom endpoint (0-based positions).
    pub fn bottom_pairing(self, strands: usize) -> Vec<usize> {
        match self {
            ClosureStyle::Standard => adjacent_pairing(strands),
            ClosureStyle::Even | ClosureStyle::DoublyEven => shifted_pairing(strands),
        }
    }
}

impl FromStr for ClosureStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "standard" => Ok(ClosureStyle::Standard),
            "even" => Ok(ClosureStyle::Even),
            "doubly-even" | "doubly_even" => Ok(ClosureStyle::DoublyEven),
            other => Err(format!("unknown closure style `{other}`")),
        }
    }
}

impl fmt::Display for ClosureStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureStyle::Standard => "standard",
            ClosureStyle::Even => "even",
            ClosureStyle::DoublyEven => "doubly-even",
        })
    }
}

fn adjacent_pairing(strands: usize) -> Vec<usize> {
    (0..strands).map(|p| p ^ 1).collect()
}

fn shifted_pairing(strands: usize) -> Vec<usize> {
    // {2,3},…,{2m,1} in 1-based terms
    (0..strands)
        .map(|p| if p % 2 == 1 { (p + 1) % strands } else { (p + strands - 1) % strands })
        .collect()
}

/// Length of row `row` (1-based) in a plat of width `m`.
pub fn row_width(m: usize, row: usize) -> usize {
    if row % 2 == 1 {
        m - 1
    } else {
        m
    }
}

/// Checks the shape of a coefficient array, reporting the first violation.
pub fn validate(m: usize, rows: &[Vec<i64>]) -> Result<()> {
    if m < 2 {
        return Err(PlatError::WidthTooSmall(m));
    }
    let n = rows.len();
    if n.is_multiple_of(2) {
        return Err(PlatError::EvenHeight(n));
    }
    for (i, row) in rows.iter().enumerate() {
        let expected = row_width(m, i + 1);
        if row.len() != expected {
            return Err(PlatError::WrongRowLength {
                row: i + 1,
                expected,
                found: row.len(),
            });
        }
    }
    Ok(())
}

/// Coefficients `a_{i,j}` of a plat in standard form. Always shape-valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistMatrix {
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl TwistMatrix {
    pub fn new(m: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        validate(m, &rows)?;
        Ok(TwistMatrix { m, rows })
    }

    /// Every entry equal to `value`.
    pub fn constant(m: usize, n: usize, value: i64) -> Result<Self> {
        let rows = (1..=n).map(|i| vec![value; row_width(m.max(1), i)]).collect();
        Self::new(m, rows)
    }

    pub fn width(&self) -> usize {
        self.m
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `a_{i,j}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    /// Copy with `a_{i,j}` (1-based) replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: i64) -> TwistMatrix {
        let mut out = self.clone();
        out.rows[i - 1][j - 1] = value;
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// True iff every `|a_{i,j}| >= c`.
    pub fn is_highly_twisted(&self, c: u64) -> bool {
        self.entries().all(|a| a.unsigned_abs() >= c)
    }

    pub fn crossing_count(&self) -> u64 {
        self.entries().map(i64::unsigned_abs).sum()
    }

    /// The standard-form word `b_1 · … · b_n` on `2m` strands.
    pub fn to_braid_word(&self) -> BraidWord {
        let mut word = BraidWord::identity(2 * self.m).expect("m >= 2");
        for (i, row) in self.rows.iter().enumerate() {
            let odd_row = i % 2 == 0;
            for (j, &a) in row.iter().enumerate() {
                let generator = if odd_row { 2 * (j + 1) } else { 2 * j + 1 };
                word.push_power(generator, -a).expect("generator in range");
            }
        }
        word
    }

    pub fn closure(&self, style: ClosureStyle) -> PlanarDiagram {
        PlanarDiagram::plat_closure(&self.to_braid_word(), style)
    }

    /// Components of the closure, counted from the strand permutation.
    pub fn component_count(&self, style: ClosureStyle) -> usize {
        closure_component_count(&self.to_braid_word(), style)
    }

    /// Text interchange format: `m n` then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.height());
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, line)| (k + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());

        let (header_line, header) = lines.next().ok_or(PlatError::Parse {
            line: 1,
            message: "missing `m n` header".into(),
        })?;
        let dims = parse_ints(header_line, header)?;
        let [m, n] = dims[..] else {
            return Err(PlatError::Parse {
                line: header_line,
                message: "header must be exactly `m n`".into(),
            });
        };
        if m < 0 || n < 0 {
            return Err(PlatError::Parse {
                line: header_line,
                message: "dimensions must be non-negative".into(),
            });
        }
        let rows = lines
            .map(|(k, line)| parse_ints(k, line))
            .collect::<Result<Vec<_>>>()?;
        // width and parity are reported before a row-count mismatch
        if (m as usize) < 2 {
            return Err(PlatError::WidthTooSmall(m as usize));
        }
        if n % 2 == 0 {
            return Err(PlatError::EvenHeight(n as usize));
        }
        if rows.len() != n as usize {
            return Err(PlatError::RowCount {
                declared: n as usize,
                found: rows.len(),
            });
        }
        Self::new(m as usize, rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson::from(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixJson = serde_json::from_str(text).map_err(|e| PlatError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if doc.format != 1 {
            return Err(PlatError::Parse {
                line: 1,
                message: format!("unsupported plat-format version {}", doc.format),
            });
        }
        if doc.rows.len() != doc.n {
            return Err(PlatError::RowCount {
                declared: doc.n,
                found: doc.rows.len(),
            });
        }
        Self::new(doc.m, doc.rows)
    }

    /// Accepts either the JSON document or the text format.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::parse_text(text)
        }
    }
}

impl fmt::Display for TwistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>().map_err(|_| PlatError::Parse {
                line,
                message: format!("`{tok}` is not an integer"),
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    #[serde(rename = "plat-format")]
    format: u32,
    m: usize,
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl From<&TwistMatrix> for MatrixJson {
    fn from(mat: &TwistMatrix) -> Self {
        MatrixJson {
            format: 1,
            m: mat.m,
            n: mat.height(),
            rows: mat.rows.clone(),
        }
    }
}

/// Components of the closure of `word`, from the permutation alone.
///
/// Top endpoints are joined by the top pairing, and by the path
/// down-strand, bottom cap, up-strand. Every endpoint has degree two in that
/// graph, so its connected components are the link components.
pub fn closure_component_count(word: &BraidWord, style: ClosureStyle) -> usize {
    let strands = word.strands();
    let perm = word.permutation();
    let mut inverse = vec![0; strands];
    for (p, &q) in perm.iter().enumerate() {
        inverse[q] = p;
    }
    let top = style.top_pairing(strands);
    let bottom = style.bottom_pairing(strands);

    let mut parent: Vec<usize> = (0..strands).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = strands;
    for p in 0..strands {
        for q in [top[p], inverse[bottom[perm[p]]]] {
            let (a, b) = (find(&mut parent, p), find(&mut parent, q));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components
}
