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

#include "sdcsim/geometry.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sdcsim/error.hpp"

namespace sdcsim::geometry {

double normalize_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  // fmod of a tiny negative value can round up to exactly 360
  return r >= 360.0 ? 0.0 : r;
}

OrbitalElements OrbitalElements::make(double altitude_km, double inclination_deg, double raan_deg,
                                      double phase_deg) {
  if (!(altitude_km > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "orbit altitude must be positive, got " + std::to_string(altitude_km));
  }
  return {altitude_km, normalize_deg(inclination_deg), normalize_deg(raan_deg),
          normalize_deg(phase_deg)};
}

double orbital_period_s(double altitude_km) {
  const double a = kEarthRadiusKm + altitude_km;
  return 2.0 * kPi * std::sqrt(a * a * a / kEarthMuKm3PerS2);
}

Vec3 propagate(const OrbitalElements& elements, double t_s) {
  const double a = kEarthRadiusKm + elements.altitude_km;
  const double mean_motion = std::sqrt(kEarthMuKm3PerS2 / (a * a * a));
  const double u = deg_to_rad(elements.phase_deg) + mean_motion * t_s;
  const double raan = deg_to_rad(elements.raan_deg);
  const double inc = deg_to_rad(elements.inclination_deg);

  const double cu = std::cos(u), su = std::sin(u);
  const double co = std::cos(raan), so = std::sin(raan);
  const double ci = std::cos(inc), si = std::sin(inc);
  return {a * (co * cu - so * su * ci), a * (so * cu + co * su * ci), a * (su * si)};
}

Vec3 ground_station_position(const GroundStation& gs, double t_s) {
  const double lat = deg_to_rad(gs.latitude_deg);
  const double lon = deg_to_rad(gs.longitude_deg) + kEarthRotationRadPerS * t_s;
  return {kEarthRadiusKm * std::cos(lat) * std::cos(lon),
          kEarthRadiusKm * std::cos(lat) * std::sin(lon), kEarthRadiusKm * std::sin(lat)};
}

double elevation_deg(const GroundStation& gs, const Vec3& sat_position, double t_s) {
  const Vec3 site = ground_station_position(gs, t_s);
  const Vec3 los = sat_position - site;
  const double range = los.norm();
  if (range == 0.0) return 90.0;
  const double s = std::clamp(los.dot(site) / (range * site.norm()), -1.0, 1.0);
  return rad_to_deg(std::asin(s));
}

double slant_range_km(const GroundStation& gs, const Vec3& sat_position, double t_s) {
  return (sat_position - ground_station_position(gs, t_s)).norm();
}

double slant_range_for_elevation_km(double elevation_deg, double altitude_km) {
  const double e = deg_to_rad(elevation_deg);
  const double r = kEarthRadiusKm;
  const double a = r + altitude_km;
  const double c = r * std::cos(e);
  return std::sqrt(a * a - c * c) - r * std::sin(e);
}

double grazing_altitude_km(const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double len2 = d.dot(d);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-a.dot(d) / len2, 0.0, 1.0);
  return (a + d * t).norm() - kEarthRadiusKm;
}

std::vector<OrbitalElements> walker_delta(int total, int planes, int phasing, double altitude_km,
                                          double inclination_deg) {
  if (total <= 0 || planes <= 0 || total % planes != 0) {
    throw Error(ErrorKind::kInvalidArgument, "walker pattern needs total divisible by planes");
  }
  const int per_plane = total / planes;
  std::vector<OrbitalElements> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int p = 0; p < planes; ++p) {
    for (int s = 0; s < per_plane; ++s) {
      const double raan = 360.0 * p / planes;
      const double phase = 360.0 * s / per_plane + 360.0 * phasing * p / total;
      out.push_back(OrbitalElements::make(altitude_km, inclination_deg, raan, phase));
    }
  }
  return out;
}

namespace {

// Top 53 bits of a 64-bit draw; independent of the standard library's
// distribution implementation, so placements are identical across toolchains.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<GroundStation> place_ground_stations(int count, double lat_limit_deg, std::uint64_t seed,
                                                 int channels_per_gs) {
  std::mt19937_64 rng(seed);
  std::vector<GroundStation> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double lat = -lat_limit_deg + 2.0 * lat_limit_deg * unit_draw(rng);
    const double lon = -180.0 + 360.0 * unit_draw(rng);
    out.push_back({i, lat, lon, channels_per_gs});
  }
  return out;
}

SlotContacts::SlotContacts(int n_gs, int n_sats)
    : n_sats_(n_sats),
      gs_visible_(static_cast<std::size_t>(n_gs)),
      isl_range_km_(static_cast<std::size_t>(n_sats) * n_sats, -1.0) {}

void SlotContacts::set_isl(int a, int b, double range_km) {
  isl_range_km_.at(static_cast<std::size_t>(a) * n_sats_ + b) = range_km;
  isl_range_km_.at(static_cast<std::size_t>(b) * n_sats_ + a) = range_km;
}

ContactTable build_contact_table(const GeometryInputs& inputs) {
  const int n_sats = static_cast<int>(inputs.satellites.size());
  const int n_gs = static_cast<int>(inputs.stations.size());

  ContactTable table;
  table.slot_s = inputs.slot_s;
  table.slots.reserve(static_cast<std::size_t>(inputs.n_slots));

  std::vector<Vec3> pos(static_cast<std::size_t>(n_sats));
  for (int k = 0; k < inputs.n_slots; ++k) {
    const double t = slot_midpoint_s(k, inputs.slot_s);
    for (int s = 0; s < n_sats; ++s) pos[s] = propagate(inputs.satellites[s], t);

    SlotContacts slot(n_gs, n_sats);
    for (int g = 0; g < n_gs; ++g) {
      const GroundStation& gs = inputs.stations[g];
      for (int s = 0; s < n_sats; ++s) {
        if (elevation_deg(gs, pos[s], t) >= inputs.elevation_mask_deg) {
          slot.visible(g).push_back({s, slant_range_km(gs, pos[s], t)});
        }
      }
    }
    for (int a = 0; a < n_sats; ++a) {
      for (int b = a + 1; b < n_sats; ++b) {
        if (line_of_sight(pos[a], pos[b])) slot.set_isl(a, b, (pos[a] - pos[b]).norm());
      }
    }
    table.slots.push_back(std::move(slot));
  }
  return table;
}

}  // namespace sdcsim::geometry
