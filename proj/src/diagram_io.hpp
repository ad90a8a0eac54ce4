#ifndef VKR_DIAGRAM_IO_HPP
#define VKR_DIAGRAM_IO_HPP

#include "diagram.hpp"

namespace vkr {

// .vkd documents: UTF-8 JSON with fields n, d, mode, vertices, edges, faces,
// outer, anchor. Serialization is canonical: fixed key order, sorted ids.
Diagram parse_vkd(const std::string& text);
std::string serialize_vkd(const Diagram& D);

Diagram load_vkd(const std::string& path);
void save_vkd(const Diagram& D, const std::string& path);

}  // namespace vkr

#endif
