use std::fmt;

/// Number of edge colors of a gem.
pub const NUM_COLORS: usize = 4;

/// One of the four edge colors `0..=3`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u8);

impl Color {
    pub const ALL: [Color; NUM_COLORS] = [Color(0), Color(1), Color(2), Color(3)];

    pub fn new(value: u8) -> Option<Color> {
        (usize::from(value) < NUM_COLORS).then_some(Color(value))
    }

    #[inline]
    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    /// The complementary set `Δ - {c}`.
    pub fn hat(self) -> ColorSet {
        ColorSet::FULL.without(self)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the four colors, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b1111);

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> ColorSet {
        colors.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }

    /// Builds a set from raw color values, rejecting values outside `0..=3`.
    pub fn from_values(values: &[u8]) -> Option<ColorSet> {
        values
            .iter()
            .map(|&v| Color::new(v))
            .collect::<Option<Vec<_>>>()
            .map(ColorSet::from_colors)
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.0) != 0
    }

    #[inline]
    pub fn with(self, c: Color) -> ColorSet {
        ColorSet(self.0 | (1 << c.0))
    }

    #[inline]
    pub fn without(self, c: Color) -> ColorSet {
        ColorSet(self.0 & !(1 << c.0))
    }

    pub fn complement(self) -> ColorSet {
        ColorSet(!self.0 & ColorSet::FULL.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    /// Smallest color in the set.
    pub fn first(self) -> Option<Color> {
        self.iter().next()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet::from_colors(iter)
    }
}
