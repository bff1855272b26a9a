/// A disjoint union of `{0,1}`-colored cycles, given by its cycle lengths.
///
/// Lengths are even and listed in non-increasing order. The labeled normal
/// form puts each cycle on consecutive vertices `s, s+1, ..., s+len-1`; color 0
/// pairs `s+2i` with `s+2i+1` and color 1 pairs `s+2i+1` with `s+2i+2`
/// (wrapping to `s`). Even vertices form one side of the bipartition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclePartition {
    lengths: Vec<usize>,
}

impl CyclePartition {
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn order(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn cycle_count(&self) -> usize {
        self.lengths.len()
    }

    /// The color-0 and color-1 involutions of the normal form.
    pub fn matchings(&self) -> [Vec<usize>; 2] {
        let n = self.order();
        let mut m0 = vec![0; n];
        let mut m1 = vec![0; n];
        let mut start = 0;
        for &len in &self.lengths {
            for i in (0..len).step_by(2) {
                let (a, b) = (start + i, start + i + 1);
                m0[a] = b;
                m0[b] = a;
                let c = start + (i + 2) % len;
                m1[b] = c;
                m1[c] = b;
            }
            start += len;
        }
        [m0, m1]
    }
}

/// One normal-form cycle union per partition of `order` into even parts.
/// Empty for odd or zero `order`.
pub fn generate_two_colored(order: usize) -> Vec<CyclePartition> {
    let mut out = Vec::new();
    if order == 0 || order % 2 != 0 {
        return out;
    }
    let mut parts = Vec::new();
    partitions(order / 2, order / 2, &mut parts, &mut out);
    out
}

fn partitions(rest: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<CyclePartition>) {
    if rest == 0 {
        out.push(CyclePartition {
            lengths: parts.iter().map(|k| 2 * k).collect(),
        });
        return;
    }
    for k in (1..=max.min(rest)).rev() {
        parts.push(k);
        partitions(rest - k, k, parts, out);
        parts.pop();
    }
}
