//! Two-row mirror diagram: the upper row holds `0..=n` (positive seeds),
//! the lower row `-n..=-0` (negative seeds), and the column of `j` above
//! is the column of `-(n - j)` below.

use dcka::schemes::Scheme;

const FILLED: char = '●';
const EMPTY: char = '○';

pub fn mirror(positive: &Scheme, negative: &Scheme) -> Vec<String> {
    let n = positive.max_index().max(negative.max_index()) as i64;
    let upper: String = (0..=n)
        .map(|j| if positive.positive_part().contains(&(j as u32)) { FILLED } else { EMPTY })
        .collect();
    let lower: String = (0..=n)
        .map(|j| if negative.negative_part().contains(&((n - j) as u32)) { FILLED } else { EMPTY })
        .collect();
    vec![format!("+ {upper}"), format!("- {lower}")]
}
