#include <cstdio>
int main() { std::puts("qknot cli placeholder"); }
