#include <cstdio>
int main(){ std::puts("irlab (under construction)"); return 0; }
