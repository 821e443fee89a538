#pragma once

#include "wlink/codecs.hpp"
#include "wlink/geom3.hpp"
#include "wlink/linkproj.hpp"
#include "wlink/tutte.hpp"

#include <string>
#include <vector>

namespace wlink {

std::string pllink_to_json(const PLLink& link);
PLLink pllink_from_json(const std::string& text);

std::string complex3_to_json(const Complex3& cx);
Complex3 complex3_from_json(const std::string& text);
std::string complex3_to_obj(const Complex3& cx);

std::string cylinders_to_json(const std::vector<Cylinder>& cyls);
std::vector<Cylinder> cylinders_from_json(const std::string& text);

std::string embedding_to_json(const RotationMap& map, const PlaneEmbedding& emb);

std::string linking_matrix_to_json(const LinkingMatrix& lm);

struct BlowupInput {
    Vec3 z2;
    std::vector<Vec3> chi, omega;
};
BlowupInput blowup_input_from_json(const std::string& text);

std::string blowup_to_json(const BlowupPoints& pts);

} // namespace wlink
