//! Reconstruction-domain image: a real-valued pixel grid stored row-major.

use crate::error::{Error, Result};

/// A `width x height` grid of real pixel values, row-major.
///
/// This is the reconstruction-domain vector of the inverse problem; solvers
/// treat `data` as a flat vector of length `width * height`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl Image {
    /// Build an image from raw row-major data.
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::shape(
                format!("{}x{} = {} pixels", width, height, width * height),
                format!("{} values", data.len()),
            ));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::invalid("image contains non-finite values"));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    /// All-zero image.
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    /// Constant-valued image.
    pub fn constant(width: usize, height: usize, value: f64) -> Self {
        Self {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Pixel accessor; `row` indexes from the top.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.width + col] = value;
    }

    /// True if both dimensions match.
    pub fn same_shape(&self, other: &Image) -> bool {
        self.width == other.width && self.height == other.height
    }

    /// Rebuild an image of this shape from a flat vector (used by solvers).
    pub fn from_shape_of(template: &Image, data: Vec<f64>) -> Result<Self> {
        Image::new(template.width, template.height, data)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.data.iter()
    }

    /// True if every pixel is finite.
    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_wrong_length() {
        assert!(Image::new(4, 4, vec![0.0; 15]).is_err());
        assert!(Image::new(4, 4, vec![0.0; 16]).is_ok());
    }

    #[test]
    fn new_rejects_non_finite() {
        let mut data = vec![0.0; 9];
        data[4] = f64::NAN;
        assert!(Image::new(3, 3, data).is_err());
    }

    #[test]
    fn indexing_is_row_major() {
        let mut img = Image::zeros(3, 2);
        img.set(1, 2, 7.0);
        assert_eq!(img.data()[1 * 3 + 2], 7.0);
        assert_eq!(img.get(1, 2), 7.0);
    }
}
