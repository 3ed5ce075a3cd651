//! Young tableaux of every flavor used here, the maps `T` (flatten-sort) and
//! `S_alpha`, the weights `r_q` and `s_q^alpha`, and tableau enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::{q_int, q_multinomial, QPoly};
use crate::setpart::SetPartition;
use crate::shapes::{multiset_perms, s_alpha_of, Composition, Partition, Word};

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

/// The conditions a filling is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Entries exactly `1..=n`, rows and columns strictly increasing.
    Standard,
    /// Rows weakly, columns strictly increasing.
    Semistandard,
    /// Semistandard with content a submultiset of `{1^a_1, 2^a_2, ...}`.
    SsTab,
    /// Distinct entries, rows and columns strictly increasing.
    Multilinear,
}

/// Per-letter row multiplicities: `beta[i][j]` counts letter `i + 1` in row
/// `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentProfile {
    pub beta: Vec<Composition>,
}

impl Tableau {
    /// Builds a tableau, checking only that the shape is a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("shape is a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter `1..=max_entry`.
    pub fn content(&self) -> Composition {
        let mut c = vec![0; self.max_entry()];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        Composition::new(c)
    }

    fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().filter_map(move |r| r.get(j).copied())
    }

    fn columns_strict(&self) -> bool {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).all(|j| {
            let col: Vec<usize> = self.column(j).collect();
            col.windows(2).all(|w| w[0] < w[1])
        })
    }

    /// Checks the invariants of `flavor`; `alphabet` is required for
    /// [`Flavor::SsTab`] and ignored otherwise.
    pub fn validate(&self, flavor: Flavor, alphabet: Option<&Composition>) -> Result<()> {
        let strict_rows = matches!(flavor, Flavor::Standard | Flavor::Multilinear);
        for (i, r) in self.rows.iter().enumerate() {
            let ok = r
                .windows(2)
                .all(|w| if strict_rows { w[0] < w[1] } else { w[0] <= w[1] });
            if !ok {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", i + 1)));
            }
        }
        if !self.columns_strict() {
            return Err(Error::InvalidTableau("columns are not strictly increasing".into()));
        }
        match flavor {
            Flavor::Standard => {
                let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
                all.sort_unstable();
                if all.iter().enumerate().any(|(i, &x)| x != i + 1) {
                    return Err(Error::InvalidTableau(format!(
                        "entries are not exactly 1..={}",
                        self.size()
                    )));
                }
            }
            Flavor::Multilinear => {
                let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
                all.sort_unstable();
                if all.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidTableau("repeated entry".into()));
                }
            }
            Flavor::Semistandard => {}
            Flavor::SsTab => {
                let alphabet =
                    alphabet.ok_or_else(|| Error::InvalidTableau("an alphabet is needed to check content".into()))?;
                check_content(&self.content(), alphabet)?;
            }
        }
        Ok(())
    }

    /// `beta^i_j(T)` for every letter `i` up to `letters`.
    pub fn content_profile(&self, letters: usize) -> ContentProfile {
        let letters = letters.max(self.max_entry());
        let mut beta = vec![vec![0; self.rows.len()]; letters];
        for (j, r) in self.rows.iter().enumerate() {
            for &x in r {
                beta[x - 1][j] += 1;
            }
        }
        ContentProfile {
            beta: beta.into_iter().map(Composition::new).collect(),
        }
    }
}

fn check_content(content: &Composition, alphabet: &Composition) -> Result<()> {
    for (i, &c) in content.parts().iter().enumerate() {
        let allowed = alphabet.parts().get(i).copied().unwrap_or(0);
        if c > allowed {
            return Err(Error::ContentOverflow {
                letter: i + 1,
                count: c,
                allowed,
            });
        }
    }
    Ok(())
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                match (wide, items.len()) {
                    (false, _) => items.concat(),
                    (true, 1) => format!("{},", items[0]),
                    (true, _) => items.join(","),
                }
            })
            .collect();
        f.pad(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `/`, e.g. `"111223/223/34"`; a row containing commas
    /// is read as a comma-separated list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|r| {
                if r.contains(',') {
                    r.split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()
                } else {
                    r.trim()
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad entry {c:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// The map `T`: row `i` holds the `i`-th smallest element of each block.
pub fn flatten_sort(a: &SetPartition) -> Tableau {
    let depth = a.blocks().iter().map(Vec::len).max().unwrap_or(0);
    let rows = (0..depth)
        .map(|i| {
            let mut row: Vec<usize> = a.blocks().iter().filter_map(|b| b.get(i).copied()).collect();
            row.sort_unstable();
            row
        })
        .collect();
    Tableau { rows }
}

/// The map `S_alpha`, applied entrywise.
pub fn apply_s_alpha(t: &Tableau, alpha: &Composition) -> Result<Tableau> {
    let rows = t
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| s_alpha_of(x, alpha)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Tableau { rows })
}

/// Letter `i` is the row of entry `i`, or `rows + 1` if `i` does not occur.
pub fn word_of(t: &Tableau, n: usize) -> Word {
    let mut w = vec![t.num_rows() + 1; n];
    for (j, r) in t.rows.iter().enumerate() {
        for &x in r {
            if x <= n {
                w[x - 1] = j + 1;
            }
        }
    }
    Word(w)
}

/// `r_ij(T) = #{j' >= j : b_{i-1,j'} < b_ij}`; row 1 has no values.
pub fn r_values(t: &Tableau) -> Vec<Vec<Option<usize>>> {
    t.rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if i == 0 {
                return vec![None; row.len()];
            }
            let above = &t.rows[i - 1];
            row.iter()
                .enumerate()
                .map(|(j, &b)| Some(above.iter().skip(j).filter(|&&a| a < b).count()))
                .collect()
        })
        .collect()
}

/// `r_q(T) = prod_{i >= 2, j} [r_ij(T)]_q`.
pub fn r_weight(t: &Tableau) -> QPoly {
    let mut out = QPoly::one();
    for r in r_values(t).into_iter().flatten().flatten() {
        if r == 0 {
            return QPoly::zero();
        }
        out *= &q_int(r);
    }
    out
}

/// `s_q^alpha(T) = prod_i [alpha_i ; beta^i, alpha_i - |beta^i|]_q`; equals
/// `s_q(T)` when the content of `T` is all of `alpha`.
pub fn s_weight(t: &Tableau, alpha: &Composition) -> Result<QPoly> {
    check_content(&t.content(), alpha)?;
    let profile = t.content_profile(alpha.len());
    Ok(alpha
        .parts()
        .iter()
        .zip(&profile.beta)
        .map(|(&a, beta)| q_multinomial(a, beta.parts()))
        .product())
}

/// `T(C, D)`: first row `C`, second row the image of `D` under the order
/// isomorphism from the positive integers onto the complement of `C`.
pub fn tcd(c: &[usize], d: &[usize]) -> Tableau {
    let image: Vec<usize> = d.iter().map(|&k| complement_nth(c, k)).collect();
    let mut rows = vec![c.to_vec()];
    if !image.is_empty() {
        rows.push(image);
    }
    rows.retain(|r| !r.is_empty());
    Tableau { rows }
}

/// The `k`-th (1-based) positive integer not in the sorted set `c`.
pub fn complement_nth(c: &[usize], k: usize) -> usize {
    let mut x = k;
    for &y in c {
        if y <= x {
            x += 1;
        } else {
            break;
        }
    }
    x
}

struct Filler<'a> {
    shape: &'a [usize],
    max_letter: usize,
    strict_rows: bool,
    caps: Vec<usize>,
    /// Optional coloring of letters; entries in a column must have strictly
    /// increasing colors.
    color: Option<Vec<usize>>,
    prefix: Option<&'a [usize]>,
}

impl Filler<'_> {
    fn run(mut self) -> Vec<Tableau> {
        let mut grid: Vec<Vec<usize>> = self.shape.iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut out = Vec::new();
        let cells: Vec<(usize, usize)> = self
            .shape
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
            .collect();
        self.go(&cells, 0, &mut grid, &mut out);
        out
    }

    fn go(&mut self, cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        let Some(&(i, j)) = cells.get(k) else {
            out.push(Tableau { rows: grid.clone() });
            return;
        };
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(grid[i][j - 1] + usize::from(self.strict_rows));
        }
        if i > 0 {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        let (lo, hi) = match self.prefix {
            Some(p) if i == 0 => (p[j], p[j]),
            _ => (lo, self.max_letter),
        };
        for x in lo..=hi {
            if self.caps[x - 1] == 0 {
                continue;
            }
            if i > 0 {
                let above = grid[i - 1][j];
                if x <= above {
                    continue;
                }
                if let Some(color) = &self.color {
                    if color[x - 1] <= color[above - 1] {
                        continue;
                    }
                }
            }
            if j > 0 && (x < grid[i][j - 1] || (self.strict_rows && x == grid[i][j - 1])) {
                continue;
            }
            self.caps[x - 1] -= 1;
            grid[i].push(x);
            self.go(cells, k + 1, grid, out);
            grid[i].pop();
            self.caps[x - 1] += 1;
        }
    }
}

/// `SSYT(mu, alpha)`: semistandard tableaux of shape `mu` and content
/// exactly `alpha`.
pub fn enumerate_ssyt(mu: &Partition, alpha: &Composition) -> Vec<Tableau> {
    if mu.size() != alpha.size() {
        return Vec::new();
    }
    Filler {
        shape: mu.parts(),
        max_letter: alpha.len(),
        strict_rows: false,
        caps: alpha.parts().to_vec(),
        color: None,
        prefix: None,
    }
    .run()
}

/// `SSTab(mu, alpha)`: semistandard fillings of `mu` by submultisets of
/// `{1^alpha_1, 2^alpha_2, ...}`.
pub fn enumerate_sstab(mu: &Partition, alpha: &Composition) -> Vec<Tableau> {
    if mu.size() > alpha.size() {
        return Vec::new();
    }
    Filler {
        shape: mu.parts(),
        max_letter: alpha.len(),
        strict_rows: false,
        caps: alpha.parts().to_vec(),
        color: None,
        prefix: None,
    }
    .run()
}

fn alpha_colors(alpha: &Composition, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|x| s_alpha_of(x, alpha).expect("entry within alpha"))
        .collect()
}

/// `SYT(mu, alpha)`: standard tableaux with no column meeting a block of
/// `A_alpha` twice.
pub fn enumerate_syt_alpha(mu: &Partition, alpha: &Composition) -> Vec<Tableau> {
    let n = mu.size();
    if n != alpha.size() {
        return Vec::new();
    }
    Filler {
        shape: mu.parts(),
        max_letter: n,
        strict_rows: true,
        caps: vec![1; n],
        color: Some(alpha_colors(alpha, n)),
        prefix: None,
    }
    .run()
}

/// Multilinear tableaux of shape `mu` with entries in `[n]`, rows and
/// columns increasing, and no column meeting a block of `A_alpha` twice
/// (`n = |alpha|`). With `first_row`, only tableaux whose first row equals it.
pub fn enumerate_multilinear(mu: &Partition, alpha: &Composition, first_row: Option<&[usize]>) -> Vec<Tableau> {
    let n = alpha.size();
    if mu.size() > n || first_row.is_some_and(|c| c.len() != mu.first() || c.iter().any(|&x| x == 0 || x > n)) {
        return Vec::new();
    }
    Filler {
        shape: mu.parts(),
        max_letter: n,
        strict_rows: true,
        caps: vec![1; n],
        color: Some(alpha_colors(alpha, n)),
        prefix: first_row,
    }
    .run()
}

/// Multilinear tableaux of shape `mu` with entries in `[n]` and increasing
/// rows and columns, without the block condition.
pub fn enumerate_multilinear_all(mu: &Partition, n: usize, first_row: Option<&[usize]>) -> Vec<Tableau> {
    if mu.size() > n || first_row.is_some_and(|c| c.len() != mu.first() || c.iter().any(|&x| x == 0 || x > n)) {
        return Vec::new();
    }
    Filler {
        shape: mu.parts(),
        max_letter: n,
        strict_rows: true,
        caps: vec![1; n],
        color: None,
        prefix: first_row,
    }
    .run()
}

/// Every standard `T^` with `S_alpha(T^) = t`, for `t` in `SSYT(mu, alpha)`.
pub fn fiber_of_s_alpha(t: &Tableau, alpha: &Composition) -> Result<Vec<Tableau>> {
    let mut content = t.content().parts().to_vec();
    if content.len() > alpha.len() {
        return Err(Error::OutOfRange {
            value: content.len(),
            max: alpha.len(),
        });
    }
    content.resize(alpha.len(), 0);
    if content != alpha.parts() {
        return Err(Error::InvalidTableau(format!(
            "content {} differs from {alpha}",
            Composition::new(content)
        )));
    }
    let sums = alpha.prefix_sums();
    let profile = t.content_profile(alpha.len());
    // for each letter, the possible assignments of its block to rows
    let choices: Vec<Vec<Vec<Vec<usize>>>> = profile
        .beta
        .iter()
        .enumerate()
        .map(|(i, beta)| {
            multiset_perms(beta)
                .map(|w| {
                    let mut per_row = vec![Vec::new(); t.num_rows()];
                    for (k, &row) in w.0.iter().enumerate() {
                        per_row[row - 1].push(sums[i] + k + 1);
                    }
                    per_row
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut rows: Vec<Vec<usize>> = t.rows.iter().map(|r| Vec::with_capacity(r.len())).collect();
        for (i, &c) in pick.iter().enumerate() {
            for (j, vals) in choices[i][c].iter().enumerate() {
                rows[j].extend_from_slice(vals);
            }
        }
        out.push(Tableau { rows });
        // odometer over the per-letter choices
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}
