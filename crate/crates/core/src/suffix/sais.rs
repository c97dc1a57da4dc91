//! Suffix array construction by induced sorting (SA-IS).
//!
//! Works over integer alphabets `0..=upper` without an explicit sentinel;
//! the virtual end-of-text symbol is smaller than every character. Recursion
//! happens on the reduced string of LMS substring names.

const EMPTY: usize = usize::MAX;

/// Returns the 0-based suffix array of `s`, whose symbols must be `<= upper`.
pub(crate) fn suffix_array(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // true = S-type, false = L-type; the last suffix is L-type because the
    // virtual sentinel follows it.
    let mut stype = vec![false; n];
    for i in (0..n - 1).rev() {
        stype[i] = if s[i] == s[i + 1] {
            stype[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // Bucket boundaries: `l_start[c]` is where L-type suffixes starting with
    // `c` begin, `s_start[c]` where the S-type ones begin.
    let mut l_start = vec![0usize; upper + 2];
    let mut s_start = vec![0usize; upper + 2];
    for i in 0..n {
        if stype[i] {
            l_start[s[i] + 1] += 1;
        } else {
            s_start[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        s_start[c] += l_start[c];
        l_start[c + 1] += s_start[c];
    }

    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let lms: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();
    let mut lms_name = vec![EMPTY; n];
    for (id, &p) in lms.iter().enumerate() {
        lms_name[p] = id;
    }

    let mut sa = vec![EMPTY; n];
    induce(s, &stype, &l_start, &s_start, &lms, &mut sa);

    let m = lms.len();
    if m > 0 {
        let sorted: Vec<usize> = sa
            .iter()
            .copied()
            .filter(|&p| p != EMPTY && lms_name[p] != EMPTY)
            .collect();
        let mut reduced = vec![0usize; m];
        let mut name = 0;
        reduced[lms_name[sorted[0]]] = 0;
        for w in sorted.windows(2) {
            if !same_lms_substring(s, &lms, &lms_name, w[0], w[1]) {
                name += 1;
            }
            reduced[lms_name[w[1]]] = name;
        }
        let reduced_sa = suffix_array(&reduced, name);
        let sorted_lms: Vec<usize> = reduced_sa.iter().map(|&r| lms[r]).collect();
        induce(s, &stype, &l_start, &s_start, &sorted_lms, &mut sa);
    }
    sa
}

fn same_lms_substring(s: &[usize], lms: &[usize], lms_name: &[usize], a: usize, b: usize) -> bool {
    let n = s.len();
    let end_of = |p: usize| lms.get(lms_name[p] + 1).copied().unwrap_or(n);
    let (end_a, end_b) = (end_of(a), end_of(b));
    if end_a - a != end_b - b {
        return false;
    }
    let (mut x, mut y) = (a, b);
    while x < end_a {
        if s[x] != s[y] {
            return false;
        }
        x += 1;
        y += 1;
    }
    // Both substrings include their closing LMS character.
    x < n && s[x] == s[y]
}

fn induce(
    s: &[usize],
    stype: &[bool],
    l_start: &[usize],
    s_start: &[usize],
    lms: &[usize],
    sa: &mut [usize],
) {
    let n = s.len();
    sa.fill(EMPTY);

    let mut head = s_start.to_vec();
    for &p in lms {
        sa[head[s[p]]] = p;
        head[s[p]] += 1;
    }

    // L-type pass, left to right. The last suffix is L-type and comes first
    // in its bucket since the sentinel precedes everything.
    head.copy_from_slice(l_start);
    sa[head[s[n - 1]]] = n - 1;
    head[s[n - 1]] += 1;
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 && !stype[p - 1] {
            sa[head[s[p - 1]]] = p - 1;
            head[s[p - 1]] += 1;
        }
    }

    // S-type pass, right to left, filling bucket tails.
    head.copy_from_slice(l_start);
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 && stype[p - 1] {
            let c = s[p - 1] + 1;
            head[c] -= 1;
            sa[head[c]] = p - 1;
        }
    }
}
