//! Bipartite matching by augmenting paths, with a Hall violator on failure.

/// Try to find a matching saturating the right side of a bipartite relation.
/// `rel[r]` is the bitmask of left vertices compatible with right vertex r.
/// On failure, returns a Hall violator: a set S of right vertices with
/// |N(S)| < |S|.
pub fn saturating_matching(left_n: usize, rel: &[u32]) -> Result<Vec<(usize, usize)>, Vec<usize>> {
    let right_n = rel.len();
    let mut match_of_left: Vec<Option<usize>> = vec![None; left_n];

    fn augment(
        r: usize,
        rel: &[u32],
        match_of_left: &mut [Option<usize>],
        visited_left: &mut u32,
    ) -> bool {
        let mut cand = rel[r] & !*visited_left;
        while cand != 0 {
            let l = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            *visited_left |= 1 << l;
            match match_of_left[l] {
                None => {
                    match_of_left[l] = Some(r);
                    return true;
                }
                Some(prev) => {
                    if augment(prev, rel, match_of_left, visited_left) {
                        match_of_left[l] = Some(r);
                        return true;
                    }
                }
            }
        }
        false
    }

    for r in 0..right_n {
        let mut visited = 0u32;
        if !augment(r, rel, &mut match_of_left, &mut visited) {
            // alternating reachability from the unmatched right vertex gives
            // the violator: every reached right vertex, whose joint
            // neighborhood is exactly the reached left vertices
            let mut s = vec![r];
            let mut left_seen = 0u32;
            let mut frontier = vec![r];
            while let Some(x) = frontier.pop() {
                let new_left = rel[x] & !left_seen;
                left_seen |= new_left;
                let mut m = new_left;
                while m != 0 {
                    let l = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if let Some(rr) = match_of_left[l] {
                        s.push(rr);
                        frontier.push(rr);
                    }
                }
            }
            s.sort_unstable();
            debug_assert!((left_seen.count_ones() as usize) < s.len());
            return Err(s);
        }
    }
    Ok(match_of_left
        .iter()
        .enumerate()
        .filter_map(|(l, r)| r.map(|r| (l, r)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_relation() {
        let rel = vec![0b111u32; 2]; // 3 left, 2 right, everything compatible
        let m = saturating_matching(3, &rel).unwrap();
        assert_eq!(m.len(), 2);
        let rights: Vec<usize> = m.iter().map(|&(_, r)| r).collect();
        assert!(rights.contains(&0) && rights.contains(&1));
    }

    #[test]
    fn empty_relation() {
        let rel = vec![0u32; 2];
        assert_eq!(saturating_matching(3, &rel), Err(vec![0]));
    }

    #[test]
    fn hall_violator() {
        // rights 0,1,2 all only see left 0 and 1
        let rel = vec![0b11u32, 0b11, 0b11];
        let s = saturating_matching(2, &rel).unwrap_err();
        // violator neighbors fewer lefts than its size
        let nbr: u32 = s.iter().fold(0, |m, &r| m | rel[r]);
        assert!((nbr.count_ones() as usize) < s.len());
    }

    #[test]
    fn matching_is_valid() {
        let rel = vec![0b0011u32, 0b0110, 0b1100];
        let m = saturating_matching(4, &rel).unwrap();
        assert_eq!(m.len(), 3);
        for &(l, r) in &m {
            assert!(rel[r] & (1 << l) != 0);
        }
        let mut ls: Vec<usize> = m.iter().map(|&(l, _)| l).collect();
        ls.dedup();
        assert_eq!(ls.len(), 3);
    }
}
