//! Small dense linear algebra over GF(2). Vectors are u64 bitmasks,
//! matrices are column lists; dimensions never exceed 48 here.

/// Invert an n x n matrix given as n columns of n-bit vectors.
/// Returns the inverse as columns, or None if singular.
pub fn invert(cols: &[u64], n: usize) -> Option<Vec<u64>> {
    debug_assert_eq!(cols.len(), n);
    // Row-reduce [M | I] keeping rows as (matrix-row bits, identity-row bits).
    // Row i of M has bit j = (cols[j] >> i) & 1.
    let mut rows: Vec<(u64, u64)> = (0..n)
        .map(|i| {
            let mut r = 0u64;
            for (j, c) in cols.iter().enumerate() {
                r |= ((c >> i) & 1) << j;
            }
            (r, 1u64 << i)
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| rows[r].0 >> col & 1 == 1)?;
        rows.swap(col, pivot);
        let (pm, pi) = rows[col];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && row.0 >> col & 1 == 1 {
                row.0 ^= pm;
                row.1 ^= pi;
            }
        }
    }
    // Rows of [I | M^-1]: row i of the inverse is rows[i].1; transpose to columns.
    let mut out = vec![0u64; n];
    for (i, &(_, inv_row)) in rows.iter().enumerate() {
        for (j, o) in out.iter_mut().enumerate() {
            *o |= ((inv_row >> j) & 1) << i;
        }
    }
    Some(out)
}

/// Basis of the kernel of a linear map given as `cols[i]` = image of unit
/// vector i. Input dimension is `cols.len()`, image bits are arbitrary.
/// Returned vectors are bitmasks over the input dimension.
pub fn kernel_basis(cols: &[u64]) -> Vec<u64> {
    // Gaussian elimination on (image, preimage) pairs; a pair whose image
    // cancels to zero yields a kernel vector.
    let mut reduced: Vec<(u64, u64)> = Vec::new(); // pivot-bearing pairs
    let mut kernel = Vec::new();
    for (i, &c) in cols.iter().enumerate() {
        let mut img = c;
        let mut pre = 1u64 << i;
        for &(rimg, rpre) in &reduced {
            let pivot = 63 - rimg.leading_zeros();
            if img >> pivot & 1 == 1 {
                img ^= rimg;
                pre ^= rpre;
            }
        }
        if img == 0 {
            kernel.push(pre);
        } else {
            reduced.push((img, pre));
            reduced.sort_by_key(|&(im, _)| std::cmp::Reverse(im));
        }
    }
    kernel
}
