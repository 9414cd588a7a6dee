#pragma once

#include <json.hpp>

#include "convord/orders.hpp"

namespace convord {

using nlohmann::json;

json to_json(const CartanData& c);
CartanData cartan_from_json(const json& j);

json to_json(const Root& r);
Root root_from_json(const json& j, int rank);

json to_json(const AffineWeylElement& x);
AffineWeylElement affine_from_json(const json& j, const CartanData& c);

json to_json(const CartanData& c, const BiconvexParam& p);
BiconvexParam biconvex_param_from_json(const CartanData& c, const json& j);

json to_json(const InfiniteWord& w);
InfiniteWord word_from_json(const CartanData& c, const json& j);

json to_json(const CartanData& c, const RowParam& rows);
RowParam rowparam_from_json(const CartanData& c, const json& j);

json to_json(const Subsystem& s);

json to_json(const OrderSpec& spec);
/// Rebuilds the assembled order; parts are validated, and the final window
/// verification runs at the given depth.
OrderSpec orderspec_from_json(const json& j, Window verify_window);

}  // namespace convord
