//! Type A Grassmannian Chow ring: Littlewood-Richardson products, Pieri
//! multiplication and the point-class pairing. Products run on partitions
//! inside the k x (n-k) box and convert back to increasing indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::index::{from_lambda, lambda_notation, Schubert, SchubertIndex, Space, SpaceKind};

/// Nonnegative integer combination of Schubert classes on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    pub space: Space,
    pub terms: BTreeMap<SchubertIndex, u64>,
}

impl ChowClass {
    pub fn zero(space: Space) -> ChowClass {
        ChowClass {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(s: &Schubert) -> ChowClass {
        let mut c = ChowClass::zero(s.space.clone());
        c.terms.insert(s.index.clone(), 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: &SchubertIndex) -> u64 {
        self.terms.get(index).copied().unwrap_or(0)
    }

    /// Adds `coeff` copies of `index`; zero coefficients are never stored.
    pub fn add(&mut self, index: SchubertIndex, coeff: u64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(index).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        Ok(())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| format!("{}·{}", c, i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn grass_dims(space: &Space) -> Result<(u32, u32)> {
    if space.kind != SpaceKind::Grass {
        return Err(Error::UnsupportedKind(format!(
            "Chow products are only implemented on G(k,n), got {}",
            space
        )));
    }
    Ok((space.top(), space.n))
}

fn same_space(x: &Space, y: &Space) -> Result<()> {
    if x != y {
        return Err(Error::SpaceMismatch(format!("{} vs {}", x, y)));
    }
    Ok(())
}

fn plain(s: &Schubert) -> Result<&[u32]> {
    match &s.index {
        SchubertIndex::Plain(a) => Ok(a),
        _ => Err(Error::UnsupportedKind("expected a Grassmannian index".into())),
    }
}

/// True iff sigma_a * sigma_b = 0, read off as a_i + b_{k-i+1} <= n for some i.
pub fn is_zero_product(x: &Schubert, y: &Schubert) -> Result<bool> {
    same_space(&x.space, &y.space)?;
    let (k, n) = grass_dims(&x.space)?;
    let (a, b) = (plain(x)?, plain(y)?);
    let k = k as usize;
    Ok((0..k).any(|i| a[i] + b[k - 1 - i] <= n))
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len().max(lambda.len());
    let part = |p: &[u32], r: usize| p.get(r).copied().unwrap_or(0) as usize;
    let size = |p: &[u32]| p.iter().map(|&x| x as usize).sum::<usize>();
    if size(nu) != size(lambda) + size(mu) {
        return 0;
    }
    if (0..rows).any(|r| part(lambda, r) > part(nu, r)) {
        return 0;
    }
    // cells in reading order: top row first, right to left inside a row
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (part(lambda, r)..part(nu, r)).rev() {
            cells.push((r, c));
        }
    }
    let content: Vec<usize> = mu.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; part(nu, r)]).collect();
    let mut used = vec![0usize; content.len() + 1];

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        content: &[usize],
        lambda_row: &dyn Fn(usize) -> usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        // row weakly increasing: the cell to the right was filled just before
        let hi = if c + 1 < grid[r].len() {
            grid[r][c + 1]
        } else {
            content.len()
        };
        // column strictly increasing against a skew cell above
        let lo = if r > 0 && c >= lambda_row(r - 1) && c < grid[r - 1].len() {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi.min(r + 1) {
            if used[v] >= content[v - 1] {
                continue;
            }
            if v > 1 && used[v] + 1 > used[v - 1] {
                continue;
            }
            used[v] += 1;
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, used, content, lambda_row);
            grid[r][c] = 0;
            used[v] -= 1;
        }
        total
    }

    let lam = lambda.to_vec();
    let lambda_row = move |r: usize| lam.get(r).copied().unwrap_or(0) as usize;
    fill(0, &cells, &mut grid, &mut used, &content, &lambda_row)
}

/// Partitions inside the k x w box of the given size, largest first.
fn box_partitions(k: usize, w: u32, size: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, cap: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = (k - cur.len()) as u32;
        for p in (0..=cap.min(left)).rev() {
            if p * slots < left {
                break;
            }
            cur.push(p);
            go(k, p, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, w, size, &mut Vec::new(), &mut out);
    out
}

/// Product of two Schubert classes of the same Grassmannian.
pub fn product_indices(x: &Schubert, y: &Schubert) -> Result<ChowClass> {
    same_space(&x.space, &y.space)?;
    let (k, n) = grass_dims(&x.space)?;
    let lx = lambda_notation(x)?;
    let ly = lambda_notation(y)?;
    let total: u32 = lx.iter().sum::<u32>() + ly.iter().sum::<u32>();
    let mut out = ChowClass::zero(x.space.clone());
    if total > k * (n - k) {
        return Ok(out);
    }
    for nu in box_partitions(k as usize, n - k, total) {
        let c = lr_coefficient(&lx, &ly, &nu);
        if c > 0 {
            out.add(from_lambda(&nu, k, n)?.index, c)?;
        }
    }
    Ok(out)
}

/// Bilinear extension of [`product_indices`].
pub fn product(x: &ChowClass, y: &ChowClass) -> Result<ChowClass> {
    same_space(&x.space, &y.space)?;
    grass_dims(&x.space)?;
    let mut out = ChowClass::zero(x.space.clone());
    for (ix, cx) in &x.terms {
        for (iy, cy) in &y.terms {
            let sx = Schubert {
                space: x.space.clone(),
                index: ix.clone(),
            };
            let sy = Schubert {
                space: y.space.clone(),
                index: iy.clone(),
            };
            let scale = cx.checked_mul(*cy).ok_or(Error::Overflow)?;
            for (iz, cz) in product_indices(&sx, &sy)?.terms {
                out.add(iz, cz.checked_mul(scale).ok_or(Error::Overflow)?)?;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pairing {
    pub value: u64,
    /// False when the dimensions do not add up to dim G(k,n); the value is then 0.
    pub complementary: bool,
}

/// Coefficient of the point class in sigma_x * sigma_y.
pub fn pairing(x: &Schubert, y: &Schubert) -> Result<Pairing> {
    same_space(&x.space, &y.space)?;
    let (k, n) = grass_dims(&x.space)?;
    let dx = crate::index::dimension(x)?;
    let dy = crate::index::dimension(y)?;
    if dx + dy != (k as u64) * ((n - k) as u64) {
        return Ok(Pairing {
            value: 0,
            complementary: false,
        });
    }
    let point = SchubertIndex::Plain((1..=k).collect());
    Ok(Pairing {
        value: product_indices(x, y)?.coefficient(&point),
        complementary: true,
    })
}

/// sigma_a times the special class indexed by (n-c+1, n-k+2, ..., n), which
/// in partition form is the single row (c - k). Valid for k <= c <= n.
pub fn pieri_chain_class(x: &Schubert, c: u32) -> Result<ChowClass> {
    let (k, n) = grass_dims(&x.space)?;
    if c < k || c > n {
        return Err(Error::InvalidArgument(format!(
            "c = {} outside {}..={} for {}",
            c, k, n, x.space
        )));
    }
    let lam = lambda_notation(x)?;
    let strip = c - k;
    let width = n - k;
    let mut out = ChowClass::zero(x.space.clone());
    // horizontal strip: row r may grow up to the previous row's old length
    fn grow(
        r: usize,
        left: u32,
        lam: &[u32],
        width: u32,
        cur: &mut Vec<u32>,
        found: &mut Vec<Vec<u32>>,
    ) {
        if r == lam.len() {
            if left == 0 {
                found.push(cur.clone());
            }
            return;
        }
        let ceiling = if r == 0 { width } else { lam[r - 1] };
        let room = ceiling - lam[r];
        for add in 0..=room.min(left) {
            cur.push(lam[r] + add);
            grow(r + 1, left - add, lam, width, cur, found);
            cur.pop();
        }
    }
    let mut found = Vec::new();
    grow(0, strip, &lam, width, &mut Vec::new(), &mut found);
    for nu in found {
        out.add(from_lambda(&nu, k, n)?.index, 1)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: &[u32], k: u32, n: u32) -> Schubert {
        Schubert::plain(a, k, n).unwrap()
    }

    #[test]
    fn lr_small_cases() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
    }

    #[test]
    fn products_in_g24() {
        let p = product_indices(&g(&[2, 4], 2, 4), &g(&[1, 4], 2, 4)).unwrap();
        assert_eq!(p.to_string(), "1·1,3");
        let q = product_indices(&g(&[1, 4], 2, 4), &g(&[1, 4], 2, 4)).unwrap();
        assert_eq!(q.to_string(), "1·1,2");
        let unit = product_indices(&g(&[3, 4], 2, 4), &g(&[1, 3], 2, 4)).unwrap();
        assert_eq!(unit.to_string(), "1·1,3");
    }

    #[test]
    fn zero_criterion_examples() {
        assert!(is_zero_product(&g(&[1, 3], 2, 4), &g(&[1, 3], 2, 4)).unwrap());
        assert!(!is_zero_product(&g(&[2, 4], 2, 4), &g(&[1, 3], 2, 4)).unwrap());
    }

    #[test]
    fn pairings() {
        let x = g(&[1, 3], 2, 4);
        assert_eq!(pairing(&x, &g(&[2, 4], 2, 4)).unwrap().value, 1);
        assert_eq!(pairing(&x, &x).unwrap().value, 0);
        let off = pairing(&x, &g(&[3, 4], 2, 4)).unwrap();
        assert!(!off.complementary);
    }

    #[test]
    fn pieri_special_cases() {
        let r = pieri_chain_class(&g(&[2, 4], 2, 4), 4).unwrap();
        assert_eq!(r.to_string(), "1·1,3");
        assert!(pieri_chain_class(&g(&[1, 5], 2, 7), 6).unwrap().is_zero());
        assert!(pieri_chain_class(&g(&[1, 5], 2, 7), 1).is_err());
    }

    #[test]
    fn mismatch_and_kind_errors() {
        let x = g(&[1, 3], 2, 4);
        let y = g(&[1, 3], 2, 5);
        assert!(matches!(is_zero_product(&x, &y), Err(Error::SpaceMismatch(_))));
        let o = Schubert::orth(&[1], &[1], 2, 7).unwrap();
        assert!(matches!(product_indices(&o, &o), Err(Error::UnsupportedKind(_))));
    }
}
