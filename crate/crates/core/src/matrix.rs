//! Dense integer matrices and the plain-text matrix format.
//!
//! The text format is a line holding `n` followed by `n` lines of `n`
//! whitespace-separated integers. Blank lines and lines starting with `#`
//! are skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row-major dense matrix of `i64` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have the same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest absolute entry, 0 for an empty matrix.
    pub fn max_abs(&self) -> u64 {
        self.data.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination in `i128`.
    pub fn determinant(&self) -> Result<i128> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let overflow = || Error::Overflow {
            context: "computing a determinant",
        };
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = a[i][j].checked_mul(a[k][k]).ok_or_else(overflow)?;
                    let rhs = a[i][k].checked_mul(a[k][j]).ok_or_else(overflow)?;
                    a[i][j] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
                }
            }
            prev = a[k][k];
        }
        Ok(sign * a[n - 1][n - 1])
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Space-aligned rows, one per line.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self
                .row(i)
                .iter()
                .map(|x| format!("{x:>width$}"))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the square-matrix text format.
pub fn parse_square_matrix(text: &str) -> Result<IntMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty input, expected the matrix size".into(),
    })?;
    let header_tokens = tokens(header);
    let n = match header_tokens.as_slice() {
        [(col, tok)] => tok.parse::<usize>().map_err(|_| Error::Parse {
            line: header_line,
            column: *col,
            message: format!("expected a positive matrix size, found `{tok}`"),
        })?,
        [] => unreachable!("blank lines are filtered"),
        [_, (col, _), ..] => {
            return Err(Error::Parse {
                line: header_line,
                column: *col,
                message: "the first line must hold only the matrix size".into(),
            })
        }
    };
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            column: 1,
            message: "matrix size must be positive".into(),
        });
    }

    let mut rows = Vec::with_capacity(n);
    for (line_no, line) in lines.by_ref() {
        if rows.len() == n {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("unexpected extra row; the matrix has {n} rows"),
            });
        }
        let toks = tokens(line);
        if toks.len() != n {
            let column = toks.get(n).map_or(line.len() + 1, |(c, _)| *c);
            return Err(Error::Parse {
                line: line_no,
                column,
                message: format!("row has {} entries, expected {n} (matrix is not square)", toks.len()),
            });
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            row.push(tok.parse::<i64>().map_err(|_| Error::Parse {
                line: line_no,
                column: col,
                message: format!("`{tok}` is not an integer"),
            })?);
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            column: 1,
            message: format!("found {} rows, expected {n} (matrix is not square)", rows.len()),
        });
    }
    IntMatrix::from_rows(&rows)
}

/// Prints a square matrix in the text format accepted by [`parse_square_matrix`].
pub fn format_square_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{}\n", m.nrows());
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Whitespace-separated tokens with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}
