//! Human-readable rendering helpers shared by the display impls.

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub fn superscript(n: u64) -> String {
    n.to_string().chars().map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Wraps `s` in parentheses when it is a sum, for use as a factor.
pub(crate) fn as_factor(s: &str) -> String {
    if s.contains('+') || s.contains('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}
