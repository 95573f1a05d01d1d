//! Row-style Hermite normal form for submodules of `F_p[s]^n`.

use super::poly::Poly;

fn row_is_zero(row: &[Poly]) -> bool {
    row.iter().all(Poly::is_zero)
}

/// `target -= q · pivot_row`.
fn subtract_multiple(target: &mut [Poly], q: &Poly, pivot_row: &[Poly]) {
    for (t, r) in target.iter_mut().zip(pivot_row) {
        *t = &*t - &(q * r);
    }
}

/// Canonical basis of the `F_p[s]`-span of `rows`: echelon form with monic
/// pivots, entries above each pivot reduced modulo the pivot, zero rows
/// dropped. Two generating sets span the same module iff their forms agree.
pub fn hermite_normal_form(rows: Vec<Vec<Poly>>, ncols: usize) -> Vec<Vec<Poly>> {
    let mut rows: Vec<Vec<Poly>> = rows.into_iter().filter(|r| !row_is_zero(r)).collect();
    for r in &rows {
        assert_eq!(r.len(), ncols, "ragged generator matrix");
    }
    let mut rank = 0;
    for col in 0..ncols {
        loop {
            let pivot = (rank..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].degree());
            let Some(pivot) = pivot else { break };
            rows.swap(rank, pivot);

            let mut cleared = true;
            for j in rank + 1..rows.len() {
                if rows[j][col].is_zero() {
                    continue;
                }
                let (q, r) = rows[j][col].div_rem(&rows[rank][col]);
                let pivot_row = rows[rank].clone();
                subtract_multiple(&mut rows[j], &q, &pivot_row);
                if !r.is_zero() {
                    cleared = false;
                }
            }
            if !cleared {
                continue;
            }

            let scale = super::field::inv(rows[rank][col].leading(), rows[rank][col].prime());
            rows[rank] = rows[rank].iter().map(|e| e.scale(scale)).collect();
            let pivot_row = rows[rank].clone();
            for row in &mut rows[..rank] {
                let (q, _) = row[col].div_rem(&pivot_row[col]);
                subtract_multiple(row, &q, &pivot_row);
            }
            rank += 1;
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Column of the first nonzero entry of a nonzero row.
pub fn pivot_column(row: &[Poly]) -> Option<usize> {
    row.iter().position(|e| !e.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 7;

    fn poly(c: &[i64]) -> Poly {
        Poly::from_coeffs(P, c)
    }

    #[test]
    fn gcd_of_a_column() {
        // (s^2 - 1) and (s - 1)(s + 2) generate (s - 1).
        let rows = vec![vec![poly(&[-1, 0, 1])], vec![poly(&[-2, 1, 1])]];
        assert_eq!(hermite_normal_form(rows, 1), vec![vec![poly(&[-1, 1])]]);
    }

    #[test]
    fn reduced_above_pivot() {
        let rows = vec![
            vec![poly(&[0, 1]), poly(&[3, 2, 1])],
            vec![Poly::zero(P), poly(&[0, 1])],
        ];
        let h = hermite_normal_form(rows, 2);
        assert_eq!(h.len(), 2);
        assert_eq!(h[0][1], poly(&[3]));
        assert!(h.iter().all(|r| r[pivot_column(r).unwrap()].is_monic()));
    }

    #[test]
    fn zero_rows_vanish() {
        let rows = vec![vec![Poly::zero(P), Poly::zero(P)]];
        assert!(hermite_normal_form(rows, 2).is_empty());
    }
}
