use crate::vertex_set::{VertexId, VertexSet};

/// Vertex set of one longest common subsequence of two duplicate-free
/// sequences over the universe `[0, n)`.
///
/// Classic `O(|a|·|b|)` table. The backtrace prefers advancing in `a` on ties,
/// which makes the chosen subsequence deterministic.
pub fn longest_common_subsequence(a: &[VertexId], b: &[VertexId], n: usize) -> VertexSet {
    let (la, lb) = (a.len(), b.len());
    let width = lb + 1;
    // table[i * width + j] = LCS length of a[i..] and b[j..]
    let mut table = vec![0u32; (la + 1) * width];
    for i in (0..la).rev() {
        for j in (0..lb).rev() {
            table[i * width + j] = if a[i] == b[j] {
                table[(i + 1) * width + j + 1] + 1
            } else {
                table[(i + 1) * width + j].max(table[i * width + j + 1])
            };
        }
    }

    let mut out = VertexSet::empty(n);
    let (mut i, mut j) = (0, 0);
    while i < la && j < lb {
        if a[i] == b[j] {
            out.insert(a[i]);
            i += 1;
            j += 1;
        } else if table[(i + 1) * width + j] >= table[i * width + j + 1] {
            i += 1;
        } else {
            j += 1;
        }
    }
    debug_assert_eq!(out.len(), table[0] as usize);
    out
}
