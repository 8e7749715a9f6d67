//! The duplex tableau behind the Waring-rank equation.

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Builds T = T_left + T_right over the alphabet {1..2m+2} for even m ≥ 4:
/// T_left is the m×(m+2) rectangle filled rowwise with m copies each of
/// 1..m+2; T_right starts with two equal columns holding m+3..2m+2 top to
/// bottom followed by m−2 singleton copies of each of m+3..2m+2. The result
/// is duplex, every symbol appears exactly m times, and no alphabet map into
/// m values makes the left block regular (each column needs m distinct values
/// but every symbol count is a multiple of m while columns number m+2).
pub fn waring_equation(m: usize) -> Result<Tableau> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::DegenerateInput(format!(
            "the Waring equation tableau needs even m >= 4, got {m}"
        )));
    }
    let m32 = m as u32;

    // left: m rows of m+2 entries, rowwise filling with m copies of each value
    let mut flat: Vec<u32> = Vec::with_capacity(m * (m + 2));
    for v in 1..=m32 + 2 {
        flat.extend(std::iter::repeat(v).take(m));
    }
    let left_rows: Vec<Vec<u32>> =
        flat.chunks(m + 2).map(|chunk| chunk.to_vec()).collect();
    let t_left = Tableau::from_rows(left_rows);

    // right: two equal columns m+3..2m+2, then m−2 singletons of each value
    let mut right_rows: Vec<Vec<u32>> = Vec::with_capacity(m);
    let mut first_row = vec![m32 + 3, m32 + 3];
    for v in m32 + 3..=2 * m32 + 2 {
        first_row.extend(std::iter::repeat(v).take(m - 2));
    }
    right_rows.push(first_row);
    for v in m32 + 4..=2 * m32 + 2 {
        right_rows.push(vec![v, v]);
    }
    let t_right = Tableau::new(
        right_rows
            .into_iter()
            .map(|r| r.into_iter().map(crate::tableau::Entry::Plain).collect())
            .collect(),
    );

    let t = t_left.concat(&t_right);

    // construction facts the callers rely on
    let cls = t.classify();
    assert!(cls.is_duplex, "Waring tableau must be duplex");
    let content = cls.content.expect("plain alphabet");
    assert_eq!(content.len(), 2 * m + 2);
    assert!(content.counts().iter().all(|&c| c as usize == m));

    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::young;

    #[test]
    fn m4_shape_and_content() {
        let t = waring_equation(4).unwrap();
        assert_eq!(t.shape(), &"16,8,8,8".parse().unwrap());
        let cls = t.classify();
        assert!(cls.is_duplex);
        let content = cls.content.unwrap();
        assert_eq!(content.len(), 10);
        assert!(content.counts().iter().all(|&c| c == 4));
    }

    #[test]
    fn m6_matches_the_displays() {
        let t = waring_equation(6).unwrap();
        let (left, right) = t.split(8).unwrap();
        assert_eq!(
            left,
            young(&["11111122", "22223333", "33444444", "55555566", "66667777", "77888888"])
        );
        // right part: first two columns 9..14 top to bottom, then 4 singletons
        // of each of 9..14 in the first row
        let mut first_row = vec![9u32, 9];
        for v in 9..=14u32 {
            first_row.extend([v; 4]);
        }
        let mut rows = vec![first_row];
        for v in 10..=14u32 {
            rows.push(vec![v, v]);
        }
        assert_eq!(right, Tableau::from_rows(rows));
    }

    #[test]
    fn odd_m_rejected() {
        assert!(matches!(waring_equation(5), Err(Error::DegenerateInput(_))));
        assert!(matches!(waring_equation(2), Err(Error::DegenerateInput(_))));
    }
}
