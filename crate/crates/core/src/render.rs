//! Character-grid drawing of a path.
//!
//! Each row is a height band; band `b` covers heights `[b, b + 1)`. Columns
//! are horizontal half-units, so up and down steps take one column and flat
//! steps take two. An up step leaving height `h` draws `/` in band `h`, a
//! down step leaving height `h` draws `\` in band `h - 1`, and a flat step at
//! height `h` draws `__` in band `h` so the underscores sit on the line `y = h`.

use crate::path::{Path, Step};

pub fn render_ascii(p: &Path) -> String {
    if p.is_empty() {
        return String::new();
    }
    let heights = p.heights();
    let min = *heights.iter().min().unwrap();
    let max = *heights.iter().max().unwrap();
    let width: usize = p.steps().iter().map(|s| s.width()).sum();
    let bands = (max - min + 1) as usize;
    let mut grid = vec![vec![' '; width]; bands];
    let row = |band: i32| (max - band) as usize;

    let mut col = 0;
    for (step, &h) in p.steps().iter().zip(&heights) {
        match step {
            Step::Up => grid[row(h)][col] = '/',
            Step::Down => grid[row(h - 1)][col] = '\\',
            Step::Flat => {
                grid[row(h)][col] = '_';
                grid[row(h)][col + 1] = '_';
            }
        }
        col += step.width();
    }

    let lines: Vec<String> = grid
        .into_iter()
        .map(|cells| cells.into_iter().collect::<String>().trim_end().to_string())
        .skip_while(|line| line.is_empty())
        .collect();
    lines.join("\n")
}
