//! Small dense linear algebra over GF(p) for degreewise computations on
//! Gröbner-presented modules.

use crate::field::PrimeField;

/// Rank of a dense matrix given by rows; the input is consumed.
pub fn rank(field: &PrimeField, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for v in rows[rank][col..].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            let nc = field.neg(c);
            for (v, p) in row[col..].iter_mut().zip(&prow[col..]) {
                *v = field.add(*v, field.mul(nc, *p));
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 5]]), 2);
        assert_eq!(rank(&f, vec![]), 0);
        assert_eq!(rank(&f, vec![vec![0, 0, 0]]), 0);
    }
}
