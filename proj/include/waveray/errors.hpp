#pragma once

#include <stdexcept>
#include <string>

namespace waveray {

// Bad inputs: config values, file schemas, operation preconditions.
// The message carries the offending key path or quantity.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two adjacent rays are about to cross: the tube width fell below the
// configured minimum spacing and the ray-based amplitude would diverge.
class CausticError : public std::runtime_error {
  public:
    CausticError(int tube, double time, const std::string& msg)
        : std::runtime_error(msg), tube_index(tube), time(time) {}

    int tube_index;
    double time;
};

// A ray's transported amplitude fell below the floor where dividing by R
// is unsafe; the ray has left the supported part of the beam.
class AmplitudeFloorError : public std::runtime_error {
  public:
    AmplitudeFloorError(int ray, double amplitude, const std::string& msg)
        : std::runtime_error(msg), ray_index(ray), amplitude(amplitude) {}

    int ray_index;
    double amplitude;
};

// The central ray's longitudinal momentum never changed sign: the beam
// was transmitted, there is no turning point to report.
class NoTurningError : public std::runtime_error {
  public:
    explicit NoTurningError(const std::string& msg) : std::runtime_error(msg) {}
};

// Spectral grid too coarse to resolve the beam envelope.
class GridResolutionError : public std::runtime_error {
  public:
    explicit GridResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace waveray
