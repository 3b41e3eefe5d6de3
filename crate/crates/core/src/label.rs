//! The composite-label encoding.
//!
//! Constructed sets and categories name their elements by joining the
//! component labels with `.`. A literal `.` or `\` inside a component is
//! escaped as `\.` and `\\`, which keeps the encoding injective for
//! arbitrary input labels; for the usual alphanumeric labels the composite
//! is just the components separated by dots. The empty tuple is written
//! `e`. Decoding is never needed at run time — constructions keep index
//! tables — so the encoding exists purely to make serialized output
//! deterministic and diff-able.

pub const EMPTY_TUPLE: &str = "e";

pub fn escape_component(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if ch == '\\' || ch == '.' {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

/// Join already-escaped-free components into one label.
pub fn join_labels<I, S>(parts: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::new();
    let mut first = true;
    for p in parts {
        if !first {
            out.push('.');
        }
        out.push_str(&escape_component(p.as_ref()));
        first = false;
    }
    if first {
        EMPTY_TUPLE.to_string()
    } else {
        out
    }
}

pub fn pair_label(a: &str, b: &str) -> String {
    join_labels([a, b])
}

/// Label of an element injected into a tagged coproduct: `tag.element`.
pub fn tagged_label(tag: &str, element: &str) -> String {
    join_labels([tag, element])
}

pub fn triple_label(a: &str, b: &str, c: &str) -> String {
    join_labels([a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_labels_join_with_dots() {
        assert_eq!(pair_label("x", "a"), "x.a");
        assert_eq!(triple_label("0", "f", "1"), "0.f.1");
    }

    #[test]
    fn separator_in_component_is_escaped() {
        assert_eq!(pair_label("x.y", "a"), "x\\.y.a");
        assert_ne!(pair_label("a.b", "c"), pair_label("a", "b.c"));
    }

    #[test]
    fn empty_tuple_label() {
        assert_eq!(join_labels(Vec::<&str>::new()), "e");
    }
}
