#include "riccitree/jsonio.hpp"

#include <cstdio>

namespace riccitree {

std::string json_double(double v) {
  if (v == 0.0) v = 0.0;  // fold negative zero so equal values print equal
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json Json::object() {
  Json j;
  j.kind_ = Kind::Obj;
  return j;
}

Json Json::array() {
  Json j;
  j.kind_ = Kind::Arr;
  return j;
}

Json Json::num(double v) {
  Json j;
  j.kind_ = Kind::Num;
  j.d_ = v;
  return j;
}

Json Json::integer(long v) {
  Json j;
  j.kind_ = Kind::Int;
  j.i_ = v;
  return j;
}

Json Json::str(std::string v) {
  Json j;
  j.kind_ = Kind::Str;
  j.s_ = std::move(v);
  return j;
}

Json Json::boolean(bool v) {
  Json j;
  j.kind_ = Kind::Bool;
  j.b_ = v;
  return j;
}

Json Json::null() { return Json(); }

Json& Json::add(const std::string& key, Json v) {
  obj_.emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  arr_.push_back(std::move(v));
  return *this;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if ((unsigned char)c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
  auto newline = [&](int d) {
    if (indent > 0) {
      out += '\n';
      out.append((size_t)indent * d, ' ');
    }
  };
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += b_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(i_); break;
    case Kind::Num: out += json_double(d_); break;
    case Kind::Str: escape_into(out, s_); break;
    case Kind::Arr:
      if (arr_.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      for (size_t i = 0; i < arr_.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        arr_[i].write(out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    case Kind::Obj:
      if (obj_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      for (size_t i = 0; i < obj_.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        escape_into(out, obj_[i].first);
        out += indent > 0 ? ": " : ":";
        obj_[i].second.write(out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

}  // namespace riccitree
