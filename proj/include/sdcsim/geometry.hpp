/*
 * Copyright 2026 The sdcsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sdcsim::geometry {

inline constexpr double kEarthRadiusKm = 6378.137;
inline constexpr double kEarthMuKm3PerS2 = 398600.4418;
inline constexpr double kEarthRotationRadPerS = 7.2921159e-5;
inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Earth-centered inertial position or displacement, kilometers.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

/// Circular orbit. Angles are kept in [0, 360).
struct OrbitalElements {
  double altitude_km = 500.0;
  double inclination_deg = 0.0;
  double raan_deg = 0.0;
  double phase_deg = 0.0;

  /// Throws Error(kInvalidArgument) for a non-positive altitude.
  static OrbitalElements make(double altitude_km, double inclination_deg, double raan_deg,
                              double phase_deg);
};

struct GroundStation {
  int id = 0;
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  int max_channels = 2;
};

double normalize_deg(double deg);

double orbital_period_s(double altitude_km);

/// Uniform circular Keplerian motion; t measured from the common epoch.
Vec3 propagate(const OrbitalElements& elements, double t_s);

/// Spherical Earth, rotating at the sidereal rate, Greenwich aligned with +x at t = 0.
Vec3 ground_station_position(const GroundStation& gs, double t_s);

double elevation_deg(const GroundStation& gs, const Vec3& sat_position, double t_s);
double slant_range_km(const GroundStation& gs, const Vec3& sat_position, double t_s);

/// Closed-form slant range to a satellite at `altitude_km` seen at `elevation_deg`.
double slant_range_for_elevation_km(double elevation_deg, double altitude_km);

/// Altitude above the Earth sphere of the lowest point of segment a-b.
double grazing_altitude_km(const Vec3& a, const Vec3& b);
inline bool line_of_sight(const Vec3& a, const Vec3& b) { return grazing_altitude_km(a, b) >= 0.0; }

/// Walker-delta pattern total/planes/phasing; all satellites share altitude and inclination.
std::vector<OrbitalElements> walker_delta(int total, int planes, int phasing, double altitude_km,
                                          double inclination_deg);

/// Seeded uniform placement over |lat| <= lat_limit_deg, lon in [-180, 180).
std::vector<GroundStation> place_ground_stations(int count, double lat_limit_deg, std::uint64_t seed,
                                                 int channels_per_gs);

struct Contact {
  int sat_id = 0;
  double range_km = 0.0;
};

/// Visibility sampled at one slot midpoint.
class SlotContacts {
 public:
  SlotContacts() = default;
  SlotContacts(int n_gs, int n_sats);

  int gs_count() const { return static_cast<int>(gs_visible_.size()); }
  int sat_count() const { return n_sats_; }

  /// Satellites above the mask for one GS, ascending sat id.
  const std::vector<Contact>& visible(int gs_index) const { return gs_visible_.at(gs_index); }
  std::vector<Contact>& visible(int gs_index) { return gs_visible_.at(gs_index); }

  bool has_los(int a, int b) const { return isl_range(a, b) > 0.0; }
  /// Range of a clear sat-sat segment, or a negative value when occluded.
  double isl_range(int a, int b) const {
    return isl_range_km_.at(static_cast<std::size_t>(a) * n_sats_ + b);
  }
  void set_isl(int a, int b, double range_km);

 private:
  int n_sats_ = 0;
  std::vector<std::vector<Contact>> gs_visible_;
  std::vector<double> isl_range_km_;
};

struct ContactTable {
  double slot_s = 1.0;
  std::vector<SlotContacts> slots;
};

struct GeometryInputs {
  std::vector<OrbitalElements> satellites;
  std::vector<GroundStation> stations;
  double slot_s = 1.0;
  int n_slots = 10;
  double elevation_mask_deg = 10.0;
};

inline double slot_midpoint_s(int slot, double slot_s) { return (slot + 0.5) * slot_s; }

ContactTable build_contact_table(const GeometryInputs& inputs);

}  // namespace sdcsim::geometry
