//! Homogeneous Garside engine (placeholder while under construction).
