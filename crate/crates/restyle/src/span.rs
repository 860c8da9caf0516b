//! Byte spans and line/column mapping for source text.

use std::fmt;

/// Half-open byte range into the source text a node was parsed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end.saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// Smallest span covering both `self` and `other`.
    pub fn cover(&self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    pub fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

/// A position in the source: 1-based line, 0-based byte column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Maps byte offsets to line/column positions.
///
/// Built once per source text; lookups are binary searches over the
/// recorded line-start offsets.
#[derive(Debug, Clone)]
pub struct LineIndex {
    /// Byte offset at which each line starts. `starts[0] == 0`.
    starts: Vec<usize>,
    text_len: usize,
}

impl LineIndex {
    pub fn new(text: &str) -> Self {
        let mut starts = vec![0];
        for (i, b) in text.bytes().enumerate() {
            if b == b'\n' {
                starts.push(i + 1);
            }
        }
        LineIndex {
            starts,
            text_len: text.len(),
        }
    }

    pub fn pos(&self, offset: usize) -> Pos {
        let offset = offset.min(self.text_len);
        let line = match self.starts.binary_search(&offset) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        Pos {
            line: line + 1,
            col: offset - self.starts[line],
        }
    }

    /// 1-based line number containing `offset`.
    pub fn line_of(&self, offset: usize) -> usize {
        self.pos(offset).line
    }

    /// Byte offset at which `line` (1-based) starts.
    pub fn line_start(&self, line: usize) -> usize {
        self.starts
            .get(line.saturating_sub(1))
            .copied()
            .unwrap_or(self.text_len)
    }

    /// Byte offset one past the end of `line` (1-based), i.e. past its
    /// trailing newline when present.
    pub fn line_end(&self, line: usize) -> usize {
        self.starts.get(line).copied().unwrap_or(self.text_len)
    }

    pub fn line_count(&self) -> usize {
        self.starts.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions() {
        let idx = LineIndex::new("ab\ncd\n");
        assert_eq!(idx.pos(0), Pos { line: 1, col: 0 });
        assert_eq!(idx.pos(2), Pos { line: 1, col: 2 });
        assert_eq!(idx.pos(3), Pos { line: 2, col: 0 });
        assert_eq!(idx.pos(5), Pos { line: 2, col: 2 });
        assert_eq!(idx.line_start(2), 3);
        assert_eq!(idx.line_end(1), 3);
    }

    #[test]
    fn no_trailing_newline() {
        let idx = LineIndex::new("ab");
        assert_eq!(idx.pos(1), Pos { line: 1, col: 1 });
        assert_eq!(idx.line_end(1), 2);
    }
}
