//! Tableaux over a closed alphabet of plain integers and lifting symbols.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Content, Partition};

/// One box entry. Plain integers are the ordinary alphabet {1..m}; `Name` and
/// `Block` are the symbols i_l and j^i_k (optionally barred) of the lifting
/// construction, so lifted and ordinary tableaux share one type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Entry {
    Plain(u32),
    /// i_l: flavor i, name-edge index l.
    Name { i: u32, l: u32 },
    /// j^i_k: row flavor j, hypergraph flavor i, block (pair) index k.
    Block { j: u32, i: u32, k: u32, barred: bool },
}

impl Entry {
    pub fn plain(self) -> Option<u32> {
        match self {
            Entry::Plain(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Entry::Plain(v) => write!(f, "{v}"),
            Entry::Name { i, l } => write!(f, "{i}_{l}"),
            Entry::Block { j, i, k, barred } => {
                write!(f, "{j}^{i}_{k}{}", if barred { "bar" } else { "" })
            }
        }
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: String| Error::FormatError { line: 0, message: m };
        if let Some(caret) = s.find('^') {
            let j: u32 =
                s[..caret].parse().map_err(|_| bad(format!("bad block symbol {s:?}")))?;
            let rest = &s[caret + 1..];
            let under = rest
                .find('_')
                .ok_or_else(|| bad(format!("bad block symbol {s:?}")))?;
            let i: u32 =
                rest[..under].parse().map_err(|_| bad(format!("bad block symbol {s:?}")))?;
            let mut tail = &rest[under + 1..];
            let barred = if let Some(stripped) = tail.strip_suffix("bar") {
                tail = stripped;
                true
            } else {
                false
            };
            let k: u32 = tail.parse().map_err(|_| bad(format!("bad block symbol {s:?}")))?;
            Ok(Entry::Block { j, i, k, barred })
        } else if let Some(under) = s.find('_') {
            let i: u32 =
                s[..under].parse().map_err(|_| bad(format!("bad name symbol {s:?}")))?;
            let l: u32 =
                s[under + 1..].parse().map_err(|_| bad(format!("bad name symbol {s:?}")))?;
            Ok(Entry::Name { i, l })
        } else {
            let v: u32 = s.parse().map_err(|_| bad(format!("bad entry {s:?}")))?;
            Ok(Entry::Plain(v))
        }
    }
}

/// A filling of a Young diagram, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<Entry>>,
}

/// Everything `classify` can tell about a tableau. `content` is only present
/// when all entries are plain integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauClass {
    pub content: Option<Content>,
    pub sorted_content: Option<Partition>,
    pub is_semistandard: bool,
    pub is_standard: bool,
    pub is_regular: bool,
    pub is_duplex: bool,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Entry>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect());
        let rows = rows.into_iter().take(shape.length()).collect();
        Tableau { shape, rows }
    }

    /// Builds a tableau of plain entries from rows of integers.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        Tableau::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(Entry::Plain).collect())
                .collect(),
        )
    }

    /// The semistandard tableau of shape `shape` with every entry in row i equal to i.
    pub fn superstandard(shape: &Partition) -> Self {
        Tableau::from_rows(
            (0..shape.length())
                .map(|r| vec![r as u32 + 1; shape.part(r) as usize])
                .collect(),
        )
    }

    pub fn empty() -> Self {
        Tableau { shape: Partition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn n_boxes(&self) -> usize {
        self.shape.size()
    }

    /// Entry in row r, column c (0-based).
    pub fn entry(&self, r: usize, c: usize) -> Entry {
        self.rows[r][c]
    }

    /// Column c as a top-to-bottom vector.
    pub fn column(&self, c: usize) -> Vec<Entry> {
        self.rows.iter().filter_map(|row| row.get(c).copied()).collect()
    }

    pub fn n_columns(&self) -> usize {
        self.shape.part(0) as usize
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flat_map(|r| r.iter().copied())
    }

    /// Applies a map to every entry.
    pub fn map_entries(&self, f: impl Fn(Entry) -> Entry) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&e| f(e)).collect()).collect(),
        }
    }

    /// Relabels plain entries through a permutation table `perm` (value v -> perm[v-1]).
    pub fn relabel(&self, perm: &[u32]) -> Tableau {
        self.map_entries(|e| match e {
            Entry::Plain(v) => Entry::Plain(perm[v as usize - 1]),
            other => other,
        })
    }

    /// Concatenation of rows; the shorter tableau is padded with empty rows.
    pub fn concat(&self, other: &Tableau) -> Tableau {
        let len = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(len);
        for r in 0..len {
            let mut row = self.rows.get(r).cloned().unwrap_or_default();
            if let Some(rhs) = other.rows.get(r) {
                row.extend(rhs.iter().copied());
            }
            rows.push(row);
        }
        Tableau::new(rows)
    }

    /// Splits off the leftmost `e` columns, which must form a full-height
    /// rectangle, and returns (leftpart, rightpart).
    pub fn split(&self, e: usize) -> Result<(Tableau, Tableau)> {
        if e == 0 {
            return Ok((Tableau::empty(), self.clone()));
        }
        let height = self.shape.length();
        let t = self.shape.transpose();
        if (t.part(e - 1) as usize) < height {
            return Err(Error::ShapeError(format!(
                "column {e} has length {} < full height {height}",
                t.part(e - 1)
            )));
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for row in &self.rows {
            left.push(row[..e].to_vec());
            right.push(row[e..].to_vec());
        }
        Ok((Tableau::new(left), Tableau::new(right)))
    }

    /// All predicates at once: content, semistandardness, regularity, duplexity.
    pub fn classify(&self) -> TableauClass {
        let all_plain = self.iter_entries().all(|e| matches!(e, Entry::Plain(_)));

        let (content, sorted_content) = if all_plain && self.n_boxes() > 0 {
            let max = self.iter_entries().map(|e| e.plain().unwrap()).max().unwrap_or(0);
            let mut counts = vec![0u32; max as usize];
            for e in self.iter_entries() {
                counts[e.plain().unwrap() as usize - 1] += 1;
            }
            let c = Content::new(counts);
            let sorted = c.sorted_descending();
            (Some(c), Some(sorted))
        } else if all_plain {
            (Some(Content::new(Vec::new())), Some(Partition::empty()))
        } else {
            (None, None)
        };

        let mut is_semistandard = all_plain;
        if all_plain {
            'rows: for (r, row) in self.rows.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    let v = e.plain().unwrap();
                    if c + 1 < row.len() && row[c + 1].plain().unwrap() < v {
                        is_semistandard = false;
                        break 'rows;
                    }
                    if r + 1 < self.rows.len() {
                        if let Some(below) = self.rows[r + 1].get(c) {
                            if below.plain().unwrap() <= v {
                                is_semistandard = false;
                                break 'rows;
                            }
                        }
                    }
                }
            }
        }

        let is_standard = is_semistandard
            && content
                .as_ref()
                .map(|c| c.total() == c.len() && c.counts().iter().all(|&x| x == 1))
                .unwrap_or(false);

        let is_regular = self.check_regular().is_ok();

        // columns compared as ordered top-to-bottom sequences
        let mut col_multiset: std::collections::HashMap<Vec<Entry>, usize> =
            std::collections::HashMap::new();
        for c in 0..self.n_columns() {
            *col_multiset.entry(self.column(c)).or_insert(0) += 1;
        }
        let is_duplex = col_multiset.values().all(|&n| n % 2 == 0);

        TableauClass { content, sorted_content, is_semistandard, is_standard, is_regular, is_duplex }
    }

    /// Ok if no column has a repeated entry, else the offending position.
    pub fn check_regular(&self) -> Result<()> {
        for c in 0..self.n_columns() {
            let col = self.column(c);
            for r in 1..col.len() {
                if col[..r].contains(&col[r]) {
                    return Err(Error::NotRegular { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn is_regular(&self) -> bool {
        self.check_regular().is_ok()
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

/// Text format: rows separated by ";", entries comma separated, e.g.
/// "1,1,1,1;2,2,2,2" or "2_1,3^2_1,3^2_1bar".
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut rows = Vec::new();
        for row in s.split(';') {
            let row = row.trim();
            if row.is_empty() {
                rows.push(Vec::new());
                continue;
            }
            let entries: Result<Vec<Entry>> = row.split(',').map(|t| t.parse()).collect();
            rows.push(entries?);
        }
        if !rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return Err(Error::FormatError {
                line: 0,
                message: "row lengths are not weakly decreasing".into(),
            });
        }
        Ok(Tableau::new(rows))
    }
}

/// Shorthand used all over the tests: digits per row, rows as separate strings.
/// `young(&["1122", "33"])` is the tableau with rows 1,1,2,2 and 3,3.
pub fn young(rows: &[&str]) -> Tableau {
    Tableau::from_rows(
        rows.iter()
            .map(|r| r.chars().map(|c| c.to_digit(10).expect("digit") as u32).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_example() {
        let t = young(&["1322", "232", "1"]);
        let cls = t.classify();
        assert_eq!(cls.content.unwrap().counts(), &[2, 4, 2]);
        assert_eq!(cls.sorted_content.unwrap(), "4,2,2".parse().unwrap());
    }

    #[test]
    fn duplex_examples() {
        assert!(young(&["11113344", "2222", "3344"]).classify().is_duplex);
        assert!(!young(&["11112344", "2223", "3344"]).classify().is_duplex);
    }

    #[test]
    fn concat_example() {
        let t = young(&["1111", "2222", "3333"]);
        let s = young(&["444", "55", "6"]);
        assert_eq!(t.concat(&s), young(&["1111444", "222255", "33336"]));
        assert_eq!(t.concat(&Tableau::empty()), t);
        assert_eq!(
            young(&["12"]).concat(&young(&["34"])),
            young(&["1234"])
        );
    }

    #[test]
    fn split_round_trip() {
        let left = young(&["1111", "2222", "3333"]);
        let right = young(&["444", "55", "6"]);
        let t = left.concat(&right);
        let (l, r) = t.split(4).unwrap();
        assert_eq!(l, left);
        assert_eq!(r, right);

        let (l, r) = t.split(0).unwrap();
        assert_eq!(l, Tableau::empty());
        assert_eq!(r, t);
    }

    #[test]
    fn split_requires_full_columns() {
        let t = young(&["111", "22"]);
        assert!(matches!(t.split(3), Err(Error::ShapeError(_))));
        assert!(t.split(2).is_ok());
    }

    #[test]
    fn regularity() {
        assert!(young(&["12", "21"]).is_regular());
        assert!(!young(&["12", "12"]).is_regular());
        // two equal entries in one column is never regular
        let t = young(&["1", "1"]);
        assert!(matches!(t.check_regular(), Err(Error::NotRegular { row: 1, col: 0 })));
    }

    #[test]
    fn doubled_columns_are_duplex() {
        // every column repeated twice
        let t = young(&["112233", "445566"]);
        assert!(t.classify().is_duplex);
    }

    #[test]
    fn standard_and_semistandard() {
        let sup = Tableau::superstandard(&"3,2".parse().unwrap());
        let cls = sup.classify();
        assert!(cls.is_semistandard);
        assert!(!cls.is_standard);
        assert_eq!(cls.sorted_content.unwrap(), "3,2".parse().unwrap());

        let std = young(&["124", "35"]);
        assert!(std.classify().is_standard);
    }

    #[test]
    fn text_round_trip_with_symbols() {
        let t = Tableau::new(vec![
            vec![
                Entry::Name { i: 2, l: 1 },
                Entry::Block { j: 3, i: 2, k: 1, barred: false },
                Entry::Block { j: 3, i: 2, k: 1, barred: true },
            ],
            vec![Entry::Plain(7)],
        ]);
        let s = t.to_string();
        assert_eq!(s, "2_1,3^2_1,3^2_1bar;7");
        let back: Tableau = s.parse().unwrap();
        assert_eq!(back, t);
    }
}
