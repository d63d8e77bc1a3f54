/// Calls `visit` with every tuple `t` where `t[i] < sizes[i]`, in
/// lexicographic order with the last position moving fastest.
pub(crate) fn for_each_choice(sizes: &[usize], mut visit: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut pick = vec![0usize; sizes.len()];
    'outer: loop {
        visit(&pick);
        let mut i = pick.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < sizes[i] {
                continue 'outer;
            }
            pick[i] = 0;
        }
    }
}
