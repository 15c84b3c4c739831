//! Splits a query line into arguments.
//!
//! Whitespace separates arguments only outside brackets and double quotes,
//! so `seed {(0) (0 0)} (0 0)` has three words. Quotes are dropped.

use uctk_core::syntax::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub text: String,
    /// Position of the first character of `text` in the source.
    pub line: usize,
    pub col: usize,
}

impl Arg {
    /// An argument given directly on the command line.
    pub fn standalone(text: &str) -> Self {
        Arg {
            text: text.to_string(),
            line: 1,
            col: 1,
        }
    }
}

pub fn split_line(line: &str, line_no: usize) -> Result<Vec<Arg>, SyntaxError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut cur: Option<Arg> = None;
    let mut depth = 0usize;
    let mut quote_at: Option<usize> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '"' {
            quote_at = match quote_at {
                Some(_) => None,
                None => Some(col),
            };
            if cur.is_none() {
                cur = Some(Arg {
                    text: String::new(),
                    line: line_no,
                    col: col + 1,
                });
            }
            i += 1;
            continue;
        }
        if quote_at.is_none() && depth == 0 && c.is_whitespace() {
            out.extend(cur.take());
            i += 1;
            continue;
        }
        let arg = cur.get_or_insert_with(|| Arg {
            text: String::new(),
            line: line_no,
            col,
        });
        arg.text.push(c);
        if quote_at.is_none() {
            match c {
                '-' if chars.get(i + 1) == Some(&'>') => {
                    arg.text.push('>');
                    i += 1;
                }
                '(' | '{' | '[' | '<' => depth += 1,
                ')' | '}' | ']' | '>' => depth = depth.saturating_sub(1),
                _ => {}
            }
        }
        i += 1;
    }
    if let Some(col) = quote_at {
        return Err(SyntaxError {
            line: line_no,
            col,
            msg: "unterminated quote".into(),
        });
    }
    out.extend(cur);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        split_line(s, 1).unwrap().into_iter().map(|a| a.text).collect()
    }

    #[test]
    fn brackets_group() {
        assert_eq!(words("seed {(0) (0 0)} (0 0)"), ["seed", "{(0) (0 0)}", "(0 0)"]);
        assert_eq!(
            words("recover <() -> ({}, (0)); ((0)) -> ({(0)}, -1)> [2:()=u1]"),
            ["recover", "<() -> ({}, (0)); ((0)) -> ({(0)}, -1)>", "[2:()=u1]"]
        );
        assert_eq!(words("  shift {1->2}:2   u1 "), ["shift", "{1->2}:2", "u1"]);
    }

    #[test]
    fn quotes_and_columns() {
        let a = split_line("analyze \"u1*2 + 3\" {(0)}", 4).unwrap();
        assert_eq!(a[1].text, "u1*2 + 3");
        assert_eq!((a[1].line, a[1].col), (4, 10));
        assert_eq!((a[2].line, a[2].col), (4, 20));
        assert_eq!(split_line("cfl \"u1", 2).unwrap_err().col, 5);
        assert_eq!(words("cfl \"\""), ["cfl", ""]);
    }
}
