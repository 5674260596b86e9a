//! Truth tables over the five crisp constants.
//!
//! Tables are generated by running the vector operators on the crisp
//! vectors and reading each result back as a label. The reference tables in
//! [`reference`] are static transcriptions used only for diffing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::norm::NormCouple;
use crate::ops::ClosureError;
use crate::penta::{Crisp, PentaValue};

/// Tolerance for reading a computed vector back as a crisp label.
pub const CRISP_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    Disjunction,
    Conjunction,
    Complement,
    Negation,
    Dual,
    Implication,
    Equivalence,
}

impl Operator {
    pub const ALL: [Operator; 7] = [
        Operator::Disjunction,
        Operator::Conjunction,
        Operator::Complement,
        Operator::Negation,
        Operator::Dual,
        Operator::Implication,
        Operator::Equivalence,
    ];

    pub fn is_binary(&self) -> bool {
        !matches!(
            self,
            Operator::Complement | Operator::Negation | Operator::Dual
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            Operator::Disjunction => "disjunction",
            Operator::Conjunction => "conjunction",
            Operator::Complement => "complement",
            Operator::Negation => "negation",
            Operator::Dual => "dual",
            Operator::Implication => "implication",
            Operator::Equivalence => "equivalence",
        }
    }

    pub fn symbol(&self) -> char {
        match self {
            Operator::Disjunction => '∪',
            Operator::Conjunction => '∩',
            Operator::Complement => '~',
            Operator::Negation => '¬',
            Operator::Dual => '≈',
            Operator::Implication => '→',
            Operator::Equivalence => '↔',
        }
    }

    /// Position of the operator in the published list of seven tables (1-based).
    pub fn table_number(&self) -> usize {
        Operator::ALL.iter().position(|o| o == self).unwrap() + 1
    }

    pub fn cell_count(&self) -> usize {
        if self.is_binary() {
            25
        } else {
            5
        }
    }

    /// Applies the operator to vectors. `y` is ignored for unary operators.
    pub fn apply(
        &self,
        x: &PentaValue,
        y: &PentaValue,
        couple: NormCouple,
    ) -> Result<PentaValue, ClosureError> {
        match self {
            Operator::Disjunction => x.union(y, couple),
            Operator::Conjunction => x.intersection(y, couple),
            Operator::Complement => Ok(x.complement()),
            Operator::Negation => Ok(x.negation()),
            Operator::Dual => Ok(x.dual()),
            Operator::Implication => x.implication(y, couple),
            Operator::Equivalence => x.equivalence(y, couple),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let op = match lower.as_str() {
            "disjunction" | "union" | "or" => Operator::Disjunction,
            "conjunction" | "intersection" | "and" => Operator::Conjunction,
            "complement" => Operator::Complement,
            "negation" | "not" => Operator::Negation,
            "dual" => Operator::Dual,
            "implication" | "implies" => Operator::Implication,
            "equivalence" | "iff" => Operator::Equivalence,
            _ => return Err(format!("unknown operator `{s}`")),
        };
        Ok(op)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("{operator} of {row}{} is not crisp: {result}", .col.map(|c| format!(" and {c}")).unwrap_or_default())]
    NotCrisp {
        operator: Operator,
        row: Crisp,
        col: Option<Crisp>,
        result: PentaValue,
    },
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A 5x5 (binary) or 5x1 (unary) table of crisp labels, rows and columns in
/// `t, i, u, c, f` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub operator: Operator,
    pub cells: Vec<Vec<Crisp>>,
}

/// One differing cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: Crisp,
    pub col: Option<Crisp>,
    pub generated: Crisp,
    pub expected: Crisp,
}

impl fmt::Display for CellMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.col {
            Some(col) => write!(
                f,
                "row {}, col {}: generated {}, expected {}",
                self.row, col, self.generated, self.expected
            ),
            None => write!(
                f,
                "row {}: generated {}, expected {}",
                self.row, self.generated, self.expected
            ),
        }
    }
}

impl TruthTable {
    fn from_letters(operator: Operator, rows: &[&str]) -> Self {
        let cells = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| Crisp::from_letter(c).expect("reference letter"))
                    .collect()
            })
            .collect();
        Self { operator, cells }
    }

    pub fn cell(&self, row: Crisp, col: Option<Crisp>) -> Crisp {
        let r = row as usize;
        self.cells[r][col.map_or(0, |c| c as usize)]
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Cells where `self` differs from `expected`.
    pub fn diff(&self, expected: &TruthTable) -> Vec<CellMismatch> {
        let binary = self.operator.is_binary();
        let mut out = Vec::new();
        for row in Crisp::ALL {
            let cols: Vec<Option<Crisp>> = if binary {
                Crisp::ALL.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            for col in cols {
                let (generated, want) = (self.cell(row, col), expected.cell(row, col));
                if generated != want {
                    out.push(CellMismatch {
                        row,
                        col,
                        generated,
                        expected: want,
                    });
                }
            }
        }
        out
    }

    /// Fixed text rendering.
    ///
    /// ```text
    /// ∪ | t i u c f
    /// --+----------
    /// t | t t t t t
    /// ```
    ///
    /// Unary tables have a single column headed by the operator symbol.
    /// Every line ends with `\n`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let symbol = self.operator.symbol();
        if self.operator.is_binary() {
            out.push_str(&format!("{symbol} |"));
            for col in Crisp::ALL {
                out.push_str(&format!(" {col}"));
            }
            out.push_str("\n--+----------\n");
        } else {
            out.push_str(&format!("  | {symbol}\n--+--\n"));
        }
        for (row, cells) in Crisp::ALL.iter().zip(&self.cells) {
            out.push_str(&format!("{row} |"));
            for cell in cells {
                out.push_str(&format!(" {cell}"));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for TruthTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|r| r.iter().map(|c| c.letter()).collect())
            .collect();
        let mut s = serializer.serialize_struct("TruthTable", 3)?;
        s.serialize_field("operator", &self.operator)?;
        s.serialize_field("labels", "tiucf")?;
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

/// Runs `operator` on every crisp input and reads the results back as labels.
pub fn generate_truth_table(
    operator: Operator,
    couple: NormCouple,
) -> Result<TruthTable, TableError> {
    let mut cells = Vec::with_capacity(5);
    for row in Crisp::ALL {
        let x = row.vector();
        let cols: Vec<Option<Crisp>> = if operator.is_binary() {
            Crisp::ALL.into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        let mut line = Vec::with_capacity(cols.len());
        for col in cols {
            let y = col.map_or(x, Crisp::vector);
            let result = operator.apply(&x, &y, couple)?;
            let label = result
                .as_crisp(CRISP_TOLERANCE)
                .ok_or(TableError::NotCrisp {
                    operator,
                    row,
                    col,
                    result,
                })?;
            line.push(label);
        }
        cells.push(line);
    }
    Ok(TruthTable { operator, cells })
}

/// Static transcriptions of the seven published tables.
pub mod reference {
    use super::{Operator, TruthTable};

    pub fn table(operator: Operator) -> TruthTable {
        let rows: &[&str] = match operator {
            Operator::Disjunction => &["ttttt", "tiiii", "tiuiu", "tiicc", "tiucf"],
            Operator::Conjunction => &["tiucf", "iiiif", "uiuif", "ciicf", "fffff"],
            Operator::Complement => &["f", "i", "u", "c", "t"],
            Operator::Negation => &["f", "i", "c", "u", "t"],
            Operator::Dual => &["t", "i", "c", "u", "f"],
            Operator::Implication => &["tiucf", "tiiii", "tiuiu", "tiicc", "ttttt"],
            Operator::Equivalence => &["tiucf", "iiiii", "uiuiu", "ciicc", "fiuct"],
        };
        TruthTable::from_letters(operator, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_match_reference_for_every_couple() {
        for couple in NormCouple::standard_set() {
            for op in Operator::ALL {
                let generated = generate_truth_table(op, couple).unwrap();
                let mismatches = generated.diff(&reference::table(op));
                assert!(mismatches.is_empty(), "{op} under {couple}: {mismatches:?}");
            }
        }
    }

    #[test]
    fn reference_shapes() {
        let total: usize = Operator::ALL
            .iter()
            .map(|&op| {
                let t = reference::table(op);
                assert_eq!(t.cell_count(), op.cell_count());
                t.cell_count()
            })
            .sum();
        assert_eq!(total, 115);
    }

    #[test]
    fn diff_reports_cells() {
        let mut t = reference::table(Operator::Implication);
        t.cells[2][2] = Crisp::I;
        let d = t.diff(&reference::table(Operator::Implication));
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "row u, col u: generated i, expected u");
    }

    #[test]
    fn render_binary() {
        let t = generate_truth_table(Operator::Disjunction, NormCouple::MinMax).unwrap();
        assert_eq!(
            t.render(),
            "∪ | t i u c f\n\
             --+----------\n\
             t | t t t t t\n\
             i | t i i i i\n\
             u | t i u i u\n\
             c | t i i c c\n\
             f | t i u c f\n"
        );
    }

    #[test]
    fn render_unary() {
        let t = generate_truth_table(Operator::Negation, NormCouple::MinMax).unwrap();
        assert_eq!(t.render(), "  | ¬\n--+--\nt | f\ni | i\nu | c\nc | u\nf | t\n");
    }

    #[test]
    fn parse_operator_names() {
        for op in Operator::ALL {
            assert_eq!(op.name().parse::<Operator>(), Ok(op));
        }
        assert!("xor".parse::<Operator>().is_err());
        assert_eq!(Operator::Disjunction.table_number(), 1);
        assert_eq!(Operator::Equivalence.table_number(), 7);
    }
}
