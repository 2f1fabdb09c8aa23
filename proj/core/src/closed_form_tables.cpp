#include "spherepde/closed_form.hpp"

#include "spherepde/errors.hpp"

#include <vector>
#include <string>

namespace spherepde {

namespace {

const char* const kKernelK[] = {
    "rat{num=[1];den=[1]} + log{coef=[1]}",
    "rat{num=[1/4];den=[1]} + arc{coef=[0,-1/2];halfpow=1}",
    "rat{num=[4,-7];den=[9,-9]} + log{coef=[1/3]}",
    "rat{num=[3,0,-5];den=[16,0,-16]} + arc{coef=[0,-3/8,0,1/4];halfpow=3}",
    "rat{num=[23,-71,43];den=[75,-150,75]} + log{coef=[1/5]}",
    "rat{num=[22,0,-71,0,40];den=[144,0,-288,0,144]} + arc{coef=[0,-5/16,0,5/12,0,-1/6];halfpow=5}",
    "rat{num=[176,-759,906,-337];den=[735,-2205,2205,-735]} + log{coef=[1/7]}",
    "rat{num=[50,0,-237,0,266,0,-94];den=[384,0,-1152,0,1152,0,-384]} + arc{coef=[0,-35/128,0,35/64,0,-7/16,0,1/8];halfpow=7}",
    "rat{num=[563,-3089,5466,-4049,1091];den=[2835,-11340,17010,-11340,2835]} + log{coef=[1/9]}",
};

// rows n = 2..8, columns L = 1..4
const char* const kGreenGL[] = {
    "rat{num=[1,4/3];den=[1]} + log{coef=[0,1]}",
    "rat{num=[-7,30,41];den=[20]} + log{coef=[-1/2,0,3/2]}",
    "rat{num=[-56,-123,210,289];den=[84]} + log{coef=[0,-3/2,0,5/2]}",
    "rat{num=[75,-660,-1182,1260,1739];den=[288]} + log{coef=[3/8,0,-15/4,0,35/8]}",
    "rat{num=[0,1/4];den=[1]} + arc{coef=[1/2,0,-1];halfpow=1}",
    "rat{num=[-1/12,0,1/3];den=[1]} + arc{coef=[0,3/2,0,-2];halfpow=1}",
    "rat{num=[0,-1/4,0,1/2];den=[1]} + arc{coef=[-1/2,0,4,0,-4];halfpow=1}",
    "rat{num=[1/20,0,-3/5,0,4/5];den=[1]} + arc{coef=[0,-5/2,0,10,0,-8];halfpow=1}",
    "rat{num=[10,13,-28];den=[15,-15]} + log{coef=[0,1]}",
    "rat{num=[-41,223,149,-359];den=[84,-84]} + log{coef=[-1/2,0,5/2]}",
    "rat{num=[-96,-213,903,397,-1027];den=[108,-108]} + log{coef=[0,-5/2,0,35/6]}",
    "rat{num=[577,-5549,-6406,24886,8069,-21929];den=[1056,-1056]} + log{coef=[5/8,0,-35/4,0,105/8]}",
    "rat{num=[0,13,0,-16];den=[24,0,-24]} + arc{coef=[3/8,0,-3/2,0,1];halfpow=3}",
    "rat{num=[-3,0,23,0,-22];den=[16,0,-16]} + arc{coef=[0,15/8,0,-5,0,3];halfpow=3}",
    "rat{num=[0,-37,0,144,0,-112];den=[40,0,-40]} + arc{coef=[-5/8,0,15/2,0,-15,0,8];halfpow=3}",
    "rat{num=[9,0,-159,0,416,0,-272];den=[48,0,-48]} + arc{coef=[0,-35/8,0,105/4,0,-42,0,20];halfpow=3}",
    "rat{num=[56,64,-359,232];den=[105,-210,105]} + log{coef=[0,1]}",
    "rat{num=[-103,692,6,-1844,1237];den=[180,-360,180]} + log{coef=[-1/2,0,7/2]}",
    "rat{num=[-704,-1519,11288,-3342,-18464,12697];den=[660,-1320,660]} + log{coef=[0,-7/2,0,21/2]}",
    "rat{num=[5477,-58742,-30293,384684,-166405,-450454,315317];den=[6240,-12480,6240]} + log{coef=[7/8,0,-63/4,0,231/8]}",
    "rat{num=[0,35,0,-84,0,46];den=[48,0,-96,0,48]} + arc{coef=[5/16,0,-15/8,0,5/2,0,-1];halfpow=5}",
    "rat{num=[-62,0,695,0,-1304,0,656];den=[240,0,-480,0,240]} + arc{coef=[0,35/16,0,-35/4,0,21/2,0,-4];halfpow=5}",
    "rat{num=[0,-255,0,1462,0,-2240,0,1024];den=[144,0,-288,0,144]} + arc{coef=[-35/48,0,35/3,0,-35,0,112/3,0,-40/3];halfpow=5}",
    "rat{num=[122,0,-2831,0,10960,0,-14160,0,5888];den=[336,0,-672,0,336]} + arc{coef=[0,-105/16,0,105/2,0,-126,0,120,0,-40];halfpow=5}",
    "rat{num=[144,131,-1518,2013,-776];den=[315,-945,945,-315]} + log{coef=[0,1]}",
    "rat{num=[-2927,23367,-14646,-75134,114273,-45021];den=[4620,-13860,13860,-4620]} + log{coef=[-1/2,0,9/2]}",
    "rat{num=[-6656,-13551,155859,-155858,-250170,450453,-180181];den=[5460,-16380,16380,-5460]} + log{coef=[0,-9/2,0,33/2]}",
    "rat{num=[4173,-49699,5793,402945,-485545,-379929,843387,-341189];den=[3360,-10080,10080,-3360]} + log{coef=[9/8,0,-99/4,0,429/8]}",
};

}  // namespace
bool has_table_kernel_K(int n) { return n >= 2 && n <= 10; }
bool has_table_green_GL(int n, int L) { return n >= 2 && n <= 8 && L >= 1 && L <= 4; }

const ClosedFormZonal& table_kernel_K(int n) {
  if (!has_table_kernel_K(n))
    throw UnsupportedError("no closed form for the Poisson kernel at n=" + std::to_string(n) + " (have 2..10)");
  static const std::vector<ClosedFormZonal> table = [] {
    std::vector<ClosedFormZonal> v;
    for (const char* s : kKernelK) v.push_back(ClosedFormZonal::parse(s));
    return v;
  }();
  return table[static_cast<size_t>(n - 2)];
}

const ClosedFormZonal& table_green_GL(int n, int L) {
  if (L == 0) return table_kernel_K(n);
  if (!has_table_green_GL(n, L))
    throw UnsupportedError("no closed form for G_L at n=" + std::to_string(n) + ", L=" + std::to_string(L) +
                           " (have n=2..8, L=1..4)");
  static const std::vector<ClosedFormZonal> table = [] {
    std::vector<ClosedFormZonal> v;
    for (const char* s : kGreenGL) v.push_back(ClosedFormZonal::parse(s));
    return v;
  }();
  return table[static_cast<size_t>((n - 2) * 4 + (L - 1))];
}

}  // namespace spherepde
