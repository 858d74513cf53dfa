#pragma once

#include <string>
#include <vector>

#include "schurproc/plane_partition.hpp"
#include "schurproc/process.hpp"

namespace schurproc {

/// Partition <-> JSON integer array, e.g. [5,3,1].
std::string to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

/// PlanePartition <-> JSON array of row arrays.
std::string to_json(const PlanePartition& pi);
PlanePartition plane_partition_from_json(const std::string& text);

/// Tile point set as an array of [t, 2h] integer pairs (h doubled).
std::string to_json(const std::vector<TilePoint>& tiles);
std::vector<TilePoint> tile_points_from_json(const std::string& text);

/// Specialization factors as a JSON array of {"kind": ..., "param": ...},
/// kind one of "geom_pole", "lin_zero", "exp".
std::string to_json(const Specialization& s);
Specialization specialization_from_json(Orientation o, const std::string& text);

/// Slice sequence as {"t": [parts...], ...} with string keys.
std::string to_json(const SliceSequence& s);

/// CSV rows "volume,weight,config" for an enumerated ensemble, with header.
std::string ensemble_csv(const BoxedEnsemble& e);

}  // namespace schurproc
