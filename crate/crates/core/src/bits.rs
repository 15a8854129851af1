//! Small helpers for `u64` vertex sets.

/// Iterates the set bits of `mask` in ascending order.
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        assert_eq!(to_vec(0b1011_0001), vec![0, 4, 5, 7]);
        assert_eq!(mask_of(&[0, 4, 5, 7]), 0b1011_0001);
        assert_eq!(ones(0).count(), 0);
    }
}
