#pragma once

namespace hypuni {
struct RoughMap;
}
