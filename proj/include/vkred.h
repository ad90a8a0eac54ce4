#ifndef VKRED_H
#define VKRED_H
#endif
