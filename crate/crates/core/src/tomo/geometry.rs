//! Fan-beam acquisition geometry.

use crate::error::{Error, Result};

/// Curved-detector fan-beam geometry over a square `image_size x image_size`
/// pixel grid centered at the origin (pixel side = 1 length unit).
///
/// The source rotates on a circle of radius `source_distance` around the
/// image center; view angles are spread evenly over 360 degrees. For each
/// view, `rays_per_angle` rays fan out from the source toward a curved
/// detector concentric with the source at radius `2 * source_distance`;
/// `detector_width` is the detector arc length in pixel units, and rays pass
/// through the centers of equally sized detector cells.
#[derive(Debug, Clone, PartialEq)]
pub struct FanBeamGeometry {
    /// Image side length N in pixels; the grid covers [-N/2, N/2]^2.
    pub image_size: usize,
    /// Number of view angles, evenly spread over 360 degrees.
    pub num_angles: usize,
    /// Number of rays (detector cells) per view angle.
    pub rays_per_angle: usize,
    /// Distance from source to image center, in pixel units.
    pub source_distance: f64,
    /// Detector arc length, in pixel units.
    pub detector_width: f64,
}

impl FanBeamGeometry {
    /// Validated constructor.
    pub fn new(
        image_size: usize,
        num_angles: usize,
        rays_per_angle: usize,
        source_distance: f64,
        detector_width: f64,
    ) -> Result<Self> {
        if image_size == 0 {
            return Err(Error::invalid("image_size must be positive"));
        }
        if num_angles < 1 || rays_per_angle < 1 {
            return Err(Error::invalid(
                "num_angles and rays_per_angle must be at least 1",
            ));
        }
        let half_diagonal = image_size as f64 * std::f64::consts::SQRT_2 / 2.0;
        if !(source_distance > half_diagonal) {
            return Err(Error::invalid(format!(
                "source_distance {} must exceed the image half-diagonal {}",
                source_distance, half_diagonal
            )));
        }
        if !(detector_width > 0.0) || !detector_width.is_finite() {
            return Err(Error::invalid("detector_width must be positive and finite"));
        }
        Ok(Self {
            image_size,
            num_angles,
            rays_per_angle,
            source_distance,
            detector_width,
        })
    }

    /// Default geometry: source at distance `2N`, detector arc just wide
    /// enough that every view covers the circle circumscribing the image.
    pub fn standard(image_size: usize, num_angles: usize, rays_per_angle: usize) -> Result<Self> {
        let d = 2.0 * image_size as f64;
        Self::new(
            image_size,
            num_angles,
            rays_per_angle,
            d,
            Self::covering_detector_width(image_size, d),
        )
    }

    /// Arc length (at detector radius `2d`) covering the circumscribed circle
    /// of the image as seen from a source at distance `d`.
    pub fn covering_detector_width(image_size: usize, source_distance: f64) -> f64 {
        let half_diagonal = image_size as f64 * std::f64::consts::SQRT_2 / 2.0;
        let half_fan = (half_diagonal / source_distance).asin();
        2.0 * half_fan * (2.0 * source_distance)
    }

    /// Total number of rays = operator rows.
    pub fn num_rays(&self) -> usize {
        self.num_angles * self.rays_per_angle
    }

    /// Number of pixels = operator columns.
    pub fn num_pixels(&self) -> usize {
        self.image_size * self.image_size
    }

    /// Source position for view `angle_idx`.
    pub(crate) fn source_position(&self, angle_idx: usize) -> (f64, f64) {
        let beta = 2.0 * std::f64::consts::PI * angle_idx as f64 / self.num_angles as f64;
        (
            self.source_distance * beta.cos(),
            self.source_distance * beta.sin(),
        )
    }

    /// Unit direction of ray `ray_idx` within view `angle_idx`.
    ///
    /// Rays pass through detector cell centers; the angular offset of cell
    /// `r` from the central ray is `arc / detector_radius`.
    pub(crate) fn ray_direction(&self, angle_idx: usize, ray_idx: usize) -> (f64, f64) {
        let beta = 2.0 * std::f64::consts::PI * angle_idx as f64 / self.num_angles as f64;
        // Central ray points from the source through the image center.
        let central = beta + std::f64::consts::PI;
        let detector_radius = 2.0 * self.source_distance;
        let cell = self.detector_width / self.rays_per_angle as f64;
        let arc = -self.detector_width / 2.0 + (ray_idx as f64 + 0.5) * cell;
        let theta = central + arc / detector_radius;
        (theta.cos(), theta.sin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_defaults() {
        let g = FanBeamGeometry::standard(256, 120, 362).unwrap();
        assert_eq!(g.num_rays(), 43440);
        assert_eq!(g.num_pixels(), 65536);
        assert_eq!(g.source_distance, 512.0);
    }

    #[test]
    fn rejects_too_close_source() {
        // Half-diagonal of a 64 image is ~45.25; a source inside it is invalid.
        assert!(FanBeamGeometry::new(64, 10, 10, 40.0, 100.0).is_err());
        assert!(FanBeamGeometry::new(64, 10, 10, 46.0, 100.0).is_ok());
    }

    #[test]
    fn central_ray_points_at_origin() {
        let g = FanBeamGeometry::standard(64, 4, 1).unwrap();
        for a in 0..4 {
            let (sx, sy) = g.source_position(a);
            let (dx, dy) = g.ray_direction(a, 0);
            // Source + t*dir must pass through the origin at t = source_distance.
            let t = g.source_distance;
            assert!((sx + t * dx).abs() < 1e-9);
            assert!((sy + t * dy).abs() < 1e-9);
        }
    }
}
